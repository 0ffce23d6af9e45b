#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"

using namespace loopsmith;

TEST_CASE("automorphism group sizes", "[group_search]") {
  CHECK(automorphism_group(preset("q8")).size() == 24);
  CHECK(automorphism_group(preset("c4_semidirect_c3")).size() == 12);
  CHECK(automorphism_group(preset("trivial")).size() == 1);
  CHECK(automorphism_group(preset("s3")).size() == 6);
  CHECK(automorphism_group(preset("dihedral(4)")).size() == 8);
  CHECK(automorphism_group(preset("dihedral(5)")).size() == 20);
  CHECK(automorphism_group(preset("dihedral(6)")).size() == 12);
  CHECK(automorphism_group(preset("klein")).size() == 6);
  CHECK(automorphism_group(preset("elementary_abelian(3)")).size() == 168);
  CHECK(automorphism_group(preset("cyclic(4)")).size() == 2);
}

TEST_CASE("automorphism output is closed and sorted", "[group_search]") {
  for (const std::string& name : {"q8", "s3", "c4_semidirect_c3", "klein"}) {
    CAPTURE(name);
    const FiniteGroup g = preset(name);
    const std::vector<Perm> auts = automorphism_group(g);
    CHECK(std::is_sorted(auts.begin(), auts.end()));
    CHECK(verify_group_closure(auts));
    for (const Perm& f : auts) {
      // genuinely a homomorphism
      bool ok = true;
      for (int x = 0; x < g.order && ok; ++x)
        for (int y = 0; y < g.order; ++y)
          if (f[g.mul(x, y)] != g.mul(f[x], f[y])) {
            ok = false;
            break;
          }
      CHECK(ok);
    }
  }
}

TEST_CASE("inner automorphism group", "[group_search]") {
  CHECK(inner_automorphism_group(preset("q8")).size() == 4);
  CHECK(inner_automorphism_group(preset("c4_semidirect_c3")).size() == 6);
  CHECK(inner_automorphism_group(preset("cyclic(6)")).size() == 1);

  // |Inn(G)| * |Z(G)| = |G| on the corpus
  for (const std::string& name :
       {"q8", "s3", "dihedral(4)", "dihedral(5)", "c4_semidirect_c3", "klein"}) {
    CAPTURE(name);
    const FiniteGroup g = preset(name);
    CHECK(static_cast<int>(inner_automorphism_group(g).size()) *
              center(g).order() ==
          g.order);
  }
}

TEST_CASE("holomorph order", "[group_search]") {
  CHECK(holomorph_order(preset("q8")) == 192);
  CHECK(holomorph_order(preset("c4_semidirect_c3")) == 144);
  CHECK(holomorph_order(preset("trivial")) == 1);
  CHECK(holomorph_order(preset("s3")) == 36);
}

TEST_CASE("isomorphism testing", "[group_search]") {
  const FiniteGroup q8 = preset("q8");
  const auto self = isomorphic(q8, q8);
  REQUIRE(self.has_value());
  CHECK(is_identity_perm(self->images));  // first witness in scan order
  CHECK(self->homomorphism_verified);

  CHECK_FALSE(isomorphic(q8, preset("dihedral(4)")).has_value());
  CHECK_FALSE(isomorphic(preset("klein"), preset("cyclic(4)")).has_value());
  CHECK(isomorphic(preset("s3"), preset("dihedral(3)")).has_value());
}

TEST_CASE("isomorphic is reflexive and symmetric on the corpus",
          "[group_search]") {
  const std::vector<std::string> names = {"trivial", "cyclic(3)", "klein",
                                          "s3", "q8", "c4_semidirect_c3"};
  std::vector<FiniteGroup> groups;
  for (const auto& n : names) groups.push_back(preset(n));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(isomorphic(groups[i], groups[i]).has_value());
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      CAPTURE(names[i], names[j]);
      CHECK(isomorphic(groups[i], groups[j]).has_value() ==
            isomorphic(groups[j], groups[i]).has_value());
    }
  }
}

TEST_CASE("order bound is enforced", "[group_search]") {
  const FiniteGroup big = preset("cyclic(100)");
  CHECK_THROWS_AS(automorphism_group(big), OrderBoundExceeded);
  CHECK_THROWS_AS(isomorphic(big, big), OrderBoundExceeded);
  CHECK_NOTHROW(automorphism_group(big, 128));
}

TEST_CASE("permutation set groups and quotients", "[group_search]") {
  const FiniteGroup g = preset("q8");
  const std::vector<Perm> inner = inner_automorphism_group(g);
  const FiniteGroup ig = permutation_set_group(inner);
  CHECK(ig.order == 4);
  CHECK(isomorphic(ig, preset("klein")).has_value());  // Q8/Z(Q8) is Klein
}
