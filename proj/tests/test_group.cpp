#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"
#include "oracle.hpp"

using namespace loopsmith;

TEST_CASE("trivial group validates", "[group]") {
  const FiniteGroup g = validate_group({{0}}, {"1"});
  CHECK(g.order == 1);
  CHECK(g.abelian);
  CHECK(g.inverses == std::vector<int>{0});
  CHECK(g.element_orders == std::vector<int>{1});
}

TEST_CASE("quaternion preset is a valid order-8 group", "[group]") {
  const FiniteGroup g = preset("q8");
  CHECK(g.order == 8);
  CHECK_FALSE(g.abelian);
  int involutions = 0;
  for (int x = 0; x < 8; ++x)
    if (g.order_of(x) == 2) ++involutions;
  CHECK(involutions == 1);  // only -1 squares to 1
  // ij = k and ji = -k under the preset labels
  CHECK(g.names[g.mul(1, 2)] == "k");
  CHECK(g.names[g.mul(2, 1)] == "-k");
}

TEST_CASE("swapped entry breaks the Latin property", "[group]") {
  const FiniteGroup c3xc2 = direct_product(preset("cyclic(3)"), preset("cyclic(2)"));
  Table t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = c3xc2.mul(i, j);
  t[2][3] = t[2][4];  // duplicate one value in row 2
  CHECK_THROWS_AS(validate_group(t), NotLatinSquare);
}

TEST_CASE("identity is relocated to index 0", "[group]") {
  // relabel C3 so that its identity sits at index 2
  const FiniteGroup c3 = preset("cyclic(3)");
  const int sw[3] = {2, 1, 0};
  Table t(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = sw[c3.mul(sw[i], sw[j])];
  REQUIRE(t[2][1] == 1);  // sanity: identity currently at 2
  const FiniteGroup g = validate_group(t, {"p", "q", "e"});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.names[0] == "e");
  CHECK(isomorphic(g, c3).has_value());
}

TEST_CASE("validation error kinds", "[group]") {
  CHECK_THROWS_AS(validate_group(oracle::identityless_order5()), NoIdentity);
  CHECK_THROWS_AS(validate_group(oracle::nonassociative_order5()),
                  NotAssociative);
  CHECK_THROWS_AS(validate_group({{0, 1}, {1, 2}}), NotLatinSquare);
  CHECK_THROWS_AS(validate_group({}), NotLatinSquare);
}

TEST_CASE("center computation", "[group]") {
  const FiniteGroup q8 = preset("q8");
  CHECK(center(q8).members == std::vector<int>{0, 4});  // {1, -1}

  const FiniteGroup g12 = preset("c4_semidirect_c3");
  CHECK(center(g12).members == std::vector<int>{0, 6});  // {1, a^2}

  const FiniteGroup c6 = preset("cyclic(6)");
  CHECK(center(c6).order() == 6);  // abelian: everything
}

TEST_CASE("elementary abelian 2 recognition", "[group]") {
  const FiniteGroup q8 = preset("q8");
  const auto zq8 = is_elementary_abelian_2(center(q8));
  CHECK(zq8.value);
  CHECK(zq8.log2_order == 1);

  const SubgroupDescriptor triv{&q8, {0}};
  const auto t = is_elementary_abelian_2(triv);
  CHECK(t.value);
  CHECK(t.log2_order == 0);

  const FiniteGroup c4 = preset("cyclic(4)");
  const SubgroupDescriptor whole{&c4, {0, 1, 2, 3}};
  CHECK_FALSE(is_elementary_abelian_2(whole).value);
}

TEST_CASE("generalized dihedral decomposition", "[group]") {
  const FiniteGroup s3 = preset("s3");
  const auto w = generalized_dihedral_decomposition(s3);
  REQUIRE(w.has_value());
  CHECK(w->subgroup.members == std::vector<int>{0, 1, 2});  // rotations
  CHECK(w->reflector == 3);
  for (int m : w->subgroup.members) {
    CHECK(s3.mul(s3.mul(w->reflector, m), w->reflector) == s3.inv(m));
  }
  CHECK(s3.mul(w->reflector, w->reflector) == 0);

  CHECK_FALSE(generalized_dihedral_decomposition(preset("q8")).has_value());
  CHECK_FALSE(generalized_dihedral_decomposition(preset("cyclic(4)")).has_value());
  CHECK_FALSE(
      generalized_dihedral_decomposition(preset("c4_semidirect_c3")).has_value());

  // the literal definition admits exponent-2 abelian groups
  CHECK(generalized_dihedral_decomposition(preset("klein")).has_value());
  CHECK(generalized_dihedral_decomposition(preset("cyclic(2)")).has_value());

  // dihedral groups decompose over their rotation subgroup first
  const auto d4 = generalized_dihedral_decomposition(preset("dihedral(4)"));
  REQUIRE(d4.has_value());
  CHECK(d4->subgroup.members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("direct product of two C2 is the Klein table", "[group]") {
  const FiniteGroup k = direct_product(preset("cyclic(2)"), preset("cyclic(2)"));
  const FiniteGroup klein = preset("klein");
  CHECK(k.table == klein.table);
}

TEST_CASE("closure from permutations", "[group]") {
  // S3 acting on 3 points
  const FiniteGroup g = closure_from_permutations({{1, 2, 0}, {1, 0, 2}});
  CHECK(g.order == 6);
  CHECK(isomorphic(g, preset("s3")).has_value());

  CHECK_THROWS_AS(preset("cyclic(513)"), ClosureBoundExceeded);
  Perm big(600);
  for (int i = 0; i < 600; ++i) big[i] = (i + 1) % 600;
  CHECK_THROWS_AS(closure_from_permutations({big}), ClosureBoundExceeded);
}

TEST_CASE("unknown preset names", "[group]") {
  CHECK_THROWS_AS(preset("nope"), UnknownPreset);
  CHECK_THROWS_AS(preset("cyclic(x)"), UnknownPreset);
  CHECK_THROWS_AS(preset("cyclic(0)"), UnknownPreset);
}

TEST_CASE("cached fields are consistent on the preset corpus", "[group]") {
  for (const std::string& name :
       {"trivial", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(6)", "klein",
        "s3", "dihedral(4)", "dihedral(5)", "dihedral(6)", "q8",
        "c4_semidirect_c3", "elementary_abelian(3)"}) {
    const FiniteGroup g = preset(name);
    CAPTURE(name);
    for (int i = 0; i < g.order; ++i) {
      CHECK(g.mul(i, g.inv(i)) == 0);
      CHECK(g.element_orders[i] >= 1);
      CHECK(g.order % g.element_orders[i] == 0);
    }
    // greedy generators actually generate
    CHECK(static_cast<int>(subgroup_closure(g, greedy_generators(g)).size()) ==
          g.order);
  }
}
