#pragma once

// Exhaustive property suite shared by the unit tests and the acceptance
// runner: every listed property is checked over all instances (mappings,
// pairs, elements) of each corpus loop. A violation is one failed instance.

#include <sstream>
#include <string>
#include <vector>

#include "loopsmith/loopsmith.hpp"

namespace property_suite {

inline std::vector<std::string> corpus_presets() {
  return {"trivial",     "cyclic(2)", "cyclic(3)",
          "cyclic(4)",   "klein",     "cyclic(5)",
          "cyclic(6)",   "s3",        "dihedral(4)",
          "q8",          "elementary_abelian(3)", "dihedral(5)",
          "dihedral(6)", "c4_semidirect_c3"};
}

struct Violation {
  std::string where;
  std::string what;
};

class Runner {
 public:
  void fail(const std::string& where, const std::string& what) {
    violations_.push_back({where, what});
  }
  void require(bool ok, const std::string& where, const std::string& what) {
    if (!ok) fail(where, what);
  }
  const std::vector<Violation>& violations() const { return violations_; }

  void run_loop_suite(const std::string& tag, const loopsmith::LoopAnalysis& la) {
    using namespace loopsmith;
    const FiniteGroup& g = la.group();
    const FiniteLoop& l = la.loop();
    const int n = g.order;

    // the enumerated set is a group containing J and all loop automorphisms
    require(verify_group_closure(la.half.elements), tag, "half set not closed");
    require(la.half.contains(la.inversion), tag, "inversion not enumerated");
    for (const Perm& a : la.loop_automorphisms.elements)
      require(la.half.contains(a), tag, "automorphism not enumerated");

    const auto pairs = commuting_pairs(l);
    for (const Perm& f : la.half.elements) {
      require(f[0] == 0, tag, "half-automorphism moves the identity");
      for (const auto& [x, y] : pairs)
        require(l.mul(f[x], f[y]) == l.mul(f[y], f[x]), tag,
                "commuting pair with non-commuting images");
    }

    // coset-fixing subgroup: exponent 2, power-of-two order
    {
      const auto size = static_cast<unsigned>(la.fixing.elements.size());
      require((size & (size - 1)) == 0, tag, "fixing order not a 2-power");
      for (const Perm& f : la.fixing.elements)
        require(is_identity_perm(compose(f, f)), tag,
                "fixing member of order > 2");
    }

    // the fixing subgroup equals the coset-fixing members of the full set
    {
      std::vector<Perm> filtered;
      for (const Perm& f : la.half.elements) {
        bool fixes = f[la.embedding.u_index] == la.embedding.u_index;
        for (int x = 0; x < n && fixes; ++x) fixes = f[x] == x;
        if (fixes) filtered.push_back(f);
      }
      require(filtered == la.fixing.elements, tag,
              "fixing subgroup disagrees with the filtered full set");
    }

    // coset images: phi(gu) in {gu, g^-1 u}; on nonabelian input every
    // element of order != 4 is pinned
    for (const Perm& f : la.fixing.elements)
      for (int x = 0; x < n; ++x) {
        const int img = f[n + x];
        require(img == n + x || img == n + g.inv(x), tag,
                "coset image escapes the two options");
        if (!g.abelian && g.order_of(x) != 4)
          require(img == n + x, tag, "non-order-4 coset element moved");
      }

    if (!g.abelian) {
      for (std::size_t i = 0; i < la.fixing.elements.size(); ++i)
        if (!is_identity_perm(la.fixing.elements[i]))
          require(classify(l, la.fixing.elements[i]).kind ==
                      MapKind::NontrivialHalf,
                  tag, "non-identity fixing member classifies trivial");
    }

    // inverted-set properties for every non-identity fixing member; the
    // supporting statements assume a nonabelian source group
    const SubgroupDescriptor zg = center(g);
    for (std::size_t i = 0; i < la.fixing.elements.size() && !g.abelian; ++i) {
      const Perm& f = la.fixing.elements[i];
      if (is_identity_perm(f)) {
        require(la.fixing_inverted[i].members.empty(), tag,
                "identity with nonempty inverted set");
        continue;
      }
      const auto& gamma = la.fixing_inverted[i].members;
      require(!gamma.empty(), tag, "nonidentity fixing member inverts nothing");
      auto in_gamma = [&](int x) {
        return std::binary_search(gamma.begin(), gamma.end(), x);
      };
      for (int x : gamma) {
        require(in_gamma(g.inv(x)), tag, "inverted set not inverse-closed");
        require(zg.contains(g.mul(x, x)), tag,
                "inverted element with non-central square");
        require(g.order_of(x) == 4, tag, "inverted element of order != 4");
      }
      for (int y = 0; y < n; ++y) {
        if (in_gamma(y)) continue;
        require(f[n + y] == n + y, tag, "uninverted coset element moved");
        for (int x : gamma) {
          require(g.mul(g.mul(g.inv(x), y), x) == g.inv(y), tag,
                  "uninverted element not inverted by conjugation");
          require(g.order_of(g.mul(x, y)) == 4, tag,
                  "product with inverted element has order != 4");
        }
      }
      for (int y = 0; y < n; ++y) {
        if (g.order_of(y) == 4) continue;
        std::vector<int> left, right;
        for (int x : gamma) {
          left.push_back(g.mul(y, x));
          right.push_back(g.mul(x, y));
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        require(left == gamma && right == gamma, tag,
                "inverted set not stable under non-order-4 translation");
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!in_gamma(a) && !in_gamma(b) && in_gamma(g.mul(b, a)))
            require(g.order_of(a) == 4, tag,
                    "two uninverted factors with inverted product");
    }

    // a nontrivial fixing subgroup forces an exponent-2 center
    if (!g.abelian && la.fixing.size() > 1)
      require(is_elementary_abelian_2(zg).value, tag,
              "nontrivial fixing subgroup with non-exponent-2 center");

    // closure oracle: {J} u Aut(L) u H generates exactly the enumerated set
    {
      std::vector<Perm> seed = la.loop_automorphisms.elements;
      seed.push_back(la.inversion);
      seed.insert(seed.end(), la.fixing.elements.begin(),
                  la.fixing.elements.end());
      const HalfGroup closed = mapping_closure(std::move(seed));
      require(closed.elements == la.half.elements, tag,
              "closure oracle disagrees with backtracking enumeration");
    }

    // bookkeeping identities
    {
      const long long inter = static_cast<long long>(
          loopsmith::detail::sorted_intersection(la.trivial_half,
                                                 la.fixing.elements)
              .size());
      require(static_cast<long long>(la.half.elements.size()) * inter ==
                  static_cast<long long>(la.trivial_half.size()) *
                      la.fixing.size(),
              tag, "product-order bookkeeping identity fails");
      require(la.nontrivial_exists == (!g.abelian && la.fixing.size() > 1),
              tag, "nontriviality inconsistent with the fixing subgroup");
    }

    // structural facts about the construction itself
    require(la.moufang, tag, "doubled loop is not Moufang");
    require(la.diassociative, tag, "Moufang loop not diassociative");
    require(la.aaip, tag, "Moufang loop without AAIP");
    require(la.associative == g.abelian, tag,
            "associativity does not match abelianness");
  }

  // every half-automorphism of a group table is an automorphism or an
  // anti-automorphism
  void run_group_table_suite(const std::string& tag,
                             const loopsmith::FiniteGroup& g) {
    using namespace loopsmith;
    const FiniteLoop l = as_loop(g);
    const HalfGroup half = enumerate_half_automorphisms(l);
    for (const Perm& f : half.elements)
      require(classify(l, f).kind != MapKind::NontrivialHalf, tag,
              "nontrivial half-automorphism of a group table");
    const HalfGroup aut = enumerate_automorphisms(l);
    if (commuting_pairs(l).size() ==
        static_cast<std::size_t>(l.order) * (l.order - 1) / 2)
      require(half.elements == aut.elements, tag,
              "abelian table with half-automorphisms beyond Aut");
    else
      require(half.size() == 2 * aut.size(), tag,
              "trivial half count is not twice the automorphism count");
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace property_suite
