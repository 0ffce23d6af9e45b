#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"
#include "oracle.hpp"

using namespace loopsmith;

namespace {
FiniteLoop doubled(const std::string& name) {
  return chein(preset(name)).loop;
}
}  // namespace

TEST_CASE("group tables validate as loops", "[loop]") {
  const FiniteGroup q8 = preset("q8");
  Table t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t[i][j] = q8.mul(i, j);
  const FiniteLoop l = validate_loop(t, q8.names);
  CHECK(l.order == 8);
  CHECK(l.two_sided_inverses.has_value());
}

TEST_CASE("doubled quaternion table validates as a loop", "[loop]") {
  const FiniteLoop l = doubled("q8");
  CHECK(l.order == 16);
  CHECK(l.two_sided_inverses.has_value());
}

TEST_CASE("loop validation errors", "[loop]") {
  CHECK_THROWS_AS(validate_loop(oracle::identityless_order5()), NoIdentity);
  CHECK_THROWS_AS(validate_loop({{0, 0}, {1, 1}}), NotLatinSquare);
  // nonassociative is fine for loops
  CHECK_NOTHROW(validate_loop(oracle::nonassociative_order5()));
}

TEST_CASE("moufang identity", "[loop]") {
  CHECK(is_moufang(doubled("q8")).ok);
  CHECK(is_moufang(as_loop(preset("s3"))).ok);  // groups are Moufang

  const FiniteLoop bad = validate_loop(oracle::nonassociative_order5());
  const TripleCheck mc = is_moufang(bad);
  REQUIRE_FALSE(mc.ok);
  const auto [x, y, z] = mc.witness;
  CHECK(bad.mul(x, bad.mul(y, bad.mul(x, z))) !=
        bad.mul(bad.mul(bad.mul(x, y), x), z));
}

TEST_CASE("associativity, diassociativity, inverse property", "[loop]") {
  const FiniteLoop mq8 = doubled("q8");
  CHECK_FALSE(is_associative(mq8).ok);
  CHECK(is_diassociative(mq8));
  CHECK(has_aaip(mq8));

  CHECK(is_associative(doubled("cyclic(4)")).ok);

  const FiniteLoop triv = doubled("trivial");
  CHECK(is_associative(triv).ok);
  CHECK(is_diassociative(triv));
  CHECK(has_aaip(triv));

  const FiniteLoop one_sided = validate_loop(oracle::nonassociative_order5());
  REQUIRE_FALSE(one_sided.two_sided_inverses.has_value());
  CHECK_THROWS_AS(has_aaip(one_sided), NoTwoSidedInverses);
  CHECK_THROWS_AS(inversion_mapping(one_sided), NoTwoSidedInverses);
}

TEST_CASE("inversion mapping", "[loop]") {
  const FiniteLoop klein_loop = as_loop(preset("klein"));
  CHECK(is_identity_perm(inversion_mapping(klein_loop)));  // exponent 2

  const FiniteLoop mq8 = doubled("q8");
  const Perm j = inversion_mapping(mq8);
  CHECK(j[1] == 5);  // i maps to -i
  CHECK(is_identity_perm(compose(j, j)));
  CHECK(classify(mq8, j).kind == MapKind::AntiAutomorphism);
}

TEST_CASE("commuting pairs", "[loop]") {
  const FiniteLoop c6 = as_loop(preset("cyclic(6)"));
  CHECK(commuting_pairs(c6).size() == 15);  // all pairs of an abelian loop

  const FiniteLoop mq8 = doubled("q8");
  const auto pairs = commuting_pairs(mq8);
  auto has = [&](int a, int b) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) !=
           pairs.end();
  };
  CHECK_FALSE(has(1, 2));  // i and j do not commute
  for (int x = 1; x < mq8.order; ++x) CHECK(has(0, x));
}

TEST_CASE("left orders agree with group element orders", "[loop]") {
  for (const std::string& name : {"q8", "s3", "c4_semidirect_c3"}) {
    const FiniteGroup g = preset(name);
    CHECK(left_orders(as_loop(g)) == g.element_orders);
  }
}

TEST_CASE("moufang implies diassociative and AAIP on the corpus", "[loop]") {
  for (const std::string& name :
       {"trivial", "cyclic(2)", "cyclic(3)", "cyclic(4)", "klein", "s3", "q8",
        "c4_semidirect_c3"}) {
    CAPTURE(name);
    const FiniteLoop l = doubled(name);
    REQUIRE(is_moufang(l).ok);
    CHECK(is_diassociative(l));
    CHECK(has_aaip(l));
  }
}
