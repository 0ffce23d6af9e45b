#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "loopsmith/chein.hpp"
#include "loopsmith/coset_fixing.hpp"
#include "loopsmith/families.hpp"
#include "loopsmith/group_search.hpp"
#include "loopsmith/half.hpp"

namespace loopsmith {

using ojson = nlohmann::ordered_json;

struct Claim {
  std::string id;
  bool pass = false;
  ojson detail;
};

struct StructureVerdict {
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
  void append(StructureVerdict other) {
    for (Claim& c : other.claims) claims.push_back(std::move(c));
  }
};

// Everything the verifiers consume, computed once per input. Immutable after
// construction; the verdict checks are independent of each other.
struct LoopAnalysis {
  CheinEmbedding embedding;

  // group side
  std::vector<Perm> group_automorphisms;
  std::vector<Perm> inner_automorphisms;
  std::vector<int> center_members;
  std::optional<std::pair<std::vector<int>, int>> dihedral;  // (G0, v)

  // loop predicates
  bool moufang = false;
  bool associative = false;
  bool diassociative = false;
  bool aaip = false;
  bool loop_abelian = false;
  Perm inversion;

  // enumerations
  HalfGroup loop_automorphisms;
  HalfGroup half;
  std::vector<MapKind> half_kinds;  // parallel to half.elements
  std::vector<Perm> trivial_half;
  HalfGroup fixing;
  std::vector<InvertedSet> fixing_inverted;  // parallel to fixing.elements
  std::vector<Perm> fixing_generators;
  bool nontrivial_exists = false;
  std::optional<int> witness_nontriviality;
  std::optional<int> witness_factorization;

  // named families and their closures
  std::vector<Perm> family_a, family_d, family_z;
  std::vector<Perm> product_ad;
  std::vector<Perm> closure_dh, closure_zh, closure_adh;

  std::vector<std::pair<std::string, double>> timings_ms;

  const FiniteGroup& group() const { return embedding.group; }
  const FiniteLoop& loop() const { return embedding.loop; }
};

struct AnalyzeOptions {
  int max_order = 32;      // loop-order bound for exhaustive enumeration
  int group_bound = 64;    // order bound for group automorphism search
  int threads = 1;
};

namespace detail {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<std::pair<std::string, double>>& sink)
      : sink_(sink) {}
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    sink_.emplace_back(name, ms);
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline bool commutes_with_all(const Perm& f, const std::vector<Perm>& set) {
  for (const Perm& g : set)
    if (compose(f, g) != compose(g, f)) return false;
  return true;
}

inline std::vector<Perm> sorted_intersection(const std::vector<Perm>& a,
                                             const std::vector<Perm>& b) {
  std::vector<Perm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace detail

// Runs the full pipeline on M(G,2): group queries, loop predicates, both
// enumerations, the coset-fixing subgroup, named families and closures.
inline LoopAnalysis analyze_chein(const FiniteGroup& g,
                                  const AnalyzeOptions& opt = {}) {
  LoopAnalysis la;
  detail::PhaseClock clock(la.timings_ms);

  la.embedding = chein(g);
  if (la.loop().order > opt.max_order)
    throw OrderBoundExceeded("loop order " + std::to_string(la.loop().order) +
                             " exceeds bound " + std::to_string(opt.max_order));
  clock.lap("build");

  la.group_automorphisms = automorphism_group(g, opt.group_bound);
  la.inner_automorphisms = inner_automorphism_group(g);
  la.center_members = center(g).members;
  if (auto w = generalized_dihedral_decomposition(g))
    la.dihedral = {w->subgroup.members, w->reflector};
  clock.lap("group_analysis");

  la.moufang = is_moufang(la.loop()).ok;
  la.associative = is_associative(la.loop()).ok;
  la.diassociative = is_diassociative(la.loop());
  la.aaip = has_aaip(la.loop());
  la.loop_abelian = commuting_pairs(la.loop()).size() ==
                    static_cast<std::size_t>(la.loop().order) *
                        (la.loop().order - 1) / 2;
  la.inversion = inversion_mapping(la.loop());
  clock.lap("loop_predicates");

  EnumOptions eopt{opt.max_order, opt.threads};
  la.loop_automorphisms = enumerate_automorphisms(la.loop(), eopt);
  clock.lap("aut_enumeration");

  la.half = enumerate_half_automorphisms(la.loop(), eopt);
  la.half_kinds.reserve(la.half.elements.size());
  for (const Perm& f : la.half.elements) {
    const MapKind kind = classify(la.loop(), f).kind;
    la.half_kinds.push_back(kind);
    if (kind != MapKind::NontrivialHalf) la.trivial_half.push_back(f);
    else la.nontrivial_exists = true;
  }
  clock.lap("half_enumeration");

  la.fixing = coset_fixing_subgroup(la.embedding);
  for (const Perm& f : la.fixing.elements)
    la.fixing_inverted.push_back(inverted_set(la.embedding, f));
  {
    // greedy generators of the fixing subgroup, for reporting
    std::vector<Perm> closed{identity_perm(la.loop().order)};
    while (closed.size() < la.fixing.elements.size()) {
      for (const Perm& f : la.fixing.elements)
        if (!sorted_contains(closed, f)) {
          la.fixing_generators.push_back(f);
          closed = mapping_closure(la.fixing_generators).elements;
          break;
        }
    }
  }
  if (!g.abelian) {
    la.witness_nontriviality = nontriviality_witness(g);
    la.witness_factorization = factorization_witness(g);
  }
  clock.lap("coset_fixing");

  la.family_a = lifted_automorphism_family(la.embedding,
                                           la.group_automorphisms).members;
  la.family_d = coset_translation_family(la.embedding).members;
  la.family_z = central_translation_family(la.embedding).members;
  la.product_ad = set_product(la.family_a, la.family_d);
  auto join = [](std::initializer_list<const std::vector<Perm>*> parts) {
    std::vector<Perm> seed;
    for (const auto* p : parts) seed.insert(seed.end(), p->begin(), p->end());
    return seed;
  };
  la.closure_dh = mapping_closure(join({&la.family_d, &la.fixing.elements})).elements;
  la.closure_zh = mapping_closure(join({&la.family_z, &la.fixing.elements})).elements;
  la.closure_adh = mapping_closure(
      join({&la.family_a, &la.family_d, &la.fixing.elements})).elements;
  clock.lap("families_closures");

  return la;
}

// --------------------------------------------------------------------------
// Verdicts. Claims carry an "applicable" detail flag: structural statements
// whose hypotheses are not met by the input are recorded, not asserted.

// The two translation families embed in Aut(L), meet trivially, satisfy the
// composition rules, and their product has holomorph order.
inline StructureVerdict verify_aut_families(const LoopAnalysis& la) {
  StructureVerdict v;
  const CheinEmbedding& e = la.embedding;
  const FiniteGroup& g = la.group();

  {
    bool ok = true;
    for (const std::vector<Perm>* fam : {&la.family_a, &la.family_d})
      for (const Perm& f : *fam) {
        if (!is_half_automorphism(la.loop(), f).ok ||
            classify(la.loop(), f).kind != MapKind::Automorphism) {
          ok = false;
          break;
        }
      }
    v.claims.push_back({"families.members_are_automorphisms", ok,
                        ojson{{"a_order", la.family_a.size()},
                              {"d_order", la.family_d.size()}}});
  }
  {
    const auto meet = detail::sorted_intersection(la.family_a, la.family_d);
    const bool ok = meet.size() == 1 && is_identity_perm(meet.front());
    v.claims.push_back({"families.intersection_trivial", ok,
                        ojson{{"intersection_order", meet.size()}}});
  }
  {
    bool ok = true;
    long long checked = 0;
    for (const Perm& phi : la.group_automorphisms) {
      const Perm a_phi = lift_automorphism(e, phi);
      if (inverse_perm(a_phi) != lift_automorphism(e, inverse_perm(phi)))
        ok = false;
      for (const Perm& psi : la.group_automorphisms) {
        if (compose(a_phi, lift_automorphism(e, psi)) !=
            lift_automorphism(e, compose(phi, psi)))
          ok = false;
        ++checked;
      }
      for (int t = 0; t < g.order; ++t) {
        if (compose(a_phi, coset_translation(e, t)) !=
            compose(coset_translation(e, phi[t]), a_phi))
          ok = false;
        ++checked;
      }
      if (!ok) break;
    }
    for (int t = 0; t < g.order && ok; ++t) {
      const Perm d_t = coset_translation(e, t);
      if (inverse_perm(d_t) != coset_translation(e, g.inv(t))) ok = false;
      for (int s = 0; s < g.order; ++s) {
        if (compose(d_t, coset_translation(e, s)) !=
            coset_translation(e, g.mul(t, s)))
          ok = false;
        ++checked;
      }
    }
    v.claims.push_back(
        {"families.composition_rules", ok, ojson{{"pairs_checked", checked}}});
  }
  {
    const long long expected =
        static_cast<long long>(la.group_automorphisms.size()) * g.order;
    const bool ok = static_cast<long long>(la.product_ad.size()) == expected;
    v.claims.push_back({"families.product_order", ok,
                        ojson{{"product_order", la.product_ad.size()},
                              {"holomorph_order", expected}}});
  }
  return v;
}

// Aut(L) equals the translation product AD, or ADS on generalized dihedral
// input whose abelian component is not of exponent 2.
inline StructureVerdict verify_aut_structure(const LoopAnalysis& la) {
  StructureVerdict v;
  const FiniteGroup& g = la.group();
  const long long aut_l = la.loop_automorphisms.size();
  const long long hol =
      static_cast<long long>(la.group_automorphisms.size()) * g.order;

  if (!la.dihedral) {
    v.claims.push_back({"aut_structure.branch", true,
                        ojson{{"generalized_dihedral", false},
                              {"branch", "translation-product"}}});
    v.claims.push_back(
        {"aut_structure.set_equality",
         la.product_ad == la.loop_automorphisms.elements,
         ojson{{"ad_order", la.product_ad.size()}, {"aut_order", aut_l}}});
    v.claims.push_back({"aut_structure.order", aut_l == hol,
                        ojson{{"aut_order", aut_l}, {"holomorph_order", hol}}});
    return v;
  }

  const auto& [g0_members, reflector] = *la.dihedral;
  bool exponent_two = true;
  for (int m : g0_members)
    if (g.order_of(m) > 2) {
      exponent_two = false;
      break;
    }
  if (exponent_two) {
    v.claims.push_back({"aut_structure.branch", true,
                        ojson{{"generalized_dihedral", true},
                              {"component_exponent_two", true},
                              {"branch", "outside-verified-structure"}}});
    return v;
  }

  v.claims.push_back({"aut_structure.branch", true,
                      ojson{{"generalized_dihedral", true},
                            {"component_exponent_two", false},
                            {"branch", "klein-extended-product"},
                            {"reflector", reflector}}});
  const SubgroupDescriptor g0{&g, g0_members};
  const std::vector<Perm> fam_s =
      klein_component_family(la.embedding, g0, reflector).members;
  const std::vector<Perm> ads = set_product(la.product_ad, fam_s);
  v.claims.push_back(
      {"aut_structure.set_equality", ads == la.loop_automorphisms.elements,
       ojson{{"ads_order", ads.size()}, {"aut_order", aut_l}}});
  {
    const auto meet = detail::sorted_intersection(la.product_ad, fam_s);
    std::vector<Perm> expected{identity_perm(la.loop().order),
                               coset_translation(la.embedding, reflector)};
    canonicalize(expected);
    v.claims.push_back({"aut_structure.klein_overlap", meet == expected,
                        ojson{{"overlap_order", meet.size()}}});
  }
  v.claims.push_back({"aut_structure.order", aut_l == 3 * hol,
                      ojson{{"aut_order", aut_l},
                            {"triple_holomorph_order", 3 * hol}}});
  return v;
}

// On a nonabelian carrier the trivial half-automorphisms split as
// Aut(L) u J.Aut(L); on an abelian carrier every half-automorphism is an
// automorphism.
inline StructureVerdict verify_trivial_half(const LoopAnalysis& la) {
  StructureVerdict v;
  if (la.loop_abelian) {
    bool all_auto = true;
    for (MapKind k : la.half_kinds)
      if (k != MapKind::Automorphism) all_auto = false;
    const bool ok =
        all_auto && la.half.elements == la.loop_automorphisms.elements;
    v.claims.push_back({"trivial_half.abelian_aut_equality", ok,
                        ojson{{"applicable", true},
                              {"abelian_carrier", true},
                              {"half_order", la.half.size()},
                              {"aut_order", la.loop_automorphisms.size()}}});
    return v;
  }

  std::vector<Perm> split = la.loop_automorphisms.elements;
  for (const Perm& a : la.loop_automorphisms.elements)
    split.push_back(compose(la.inversion, a));
  canonicalize(split);
  v.claims.push_back({"trivial_half.split", split == la.trivial_half,
                      ojson{{"split_order", split.size()},
                            {"trivial_order", la.trivial_half.size()}}});
  v.claims.push_back(
      {"trivial_half.order",
       la.trivial_half.size() == 2 * la.loop_automorphisms.elements.size(),
       ojson{{"trivial_order", la.trivial_half.size()},
             {"aut_order", la.loop_automorphisms.size()}}});
  v.claims.push_back(
      {"trivial_half.inversion_central",
       detail::commutes_with_all(la.inversion, la.trivial_half),
       ojson{{"checked", la.trivial_half.size()}}});
  return v;
}

// Half(L) = Half_T(L) . H, the fixing subgroup meets AD trivially, the
// inversion commutes with everything and (when a nontrivial half-automorphism
// exists) sits outside ADH, which covers exactly half of Half(L).
inline StructureVerdict verify_half_decomposition(const LoopAnalysis& la) {
  StructureVerdict v;
  const bool hypothesis = la.nontrivial_exists;

  v.claims.push_back(
      {"half_decomp.product",
       set_product(la.trivial_half, la.fixing.elements) == la.half.elements,
       ojson{{"trivial_order", la.trivial_half.size()},
             {"fixing_order", la.fixing.size()},
             {"half_order", la.half.size()}}});
  {
    const auto meet =
        detail::sorted_intersection(la.fixing.elements, la.product_ad);
    v.claims.push_back({"half_decomp.intersection_trivial",
                        meet.size() == 1 && is_identity_perm(meet.front()),
                        ojson{{"intersection_order", meet.size()}}});
  }
  v.claims.push_back({"half_decomp.inversion_central",
                      detail::commutes_with_all(la.inversion, la.half.elements),
                      ojson{{"checked", la.half.size()}}});
  {
    const bool applicable = !la.group().abelian;
    const bool ok =
        !applicable || !sorted_contains(la.closure_adh, la.inversion);
    v.claims.push_back({"half_decomp.inversion_outside", ok,
                        ojson{{"applicable", applicable},
                              {"adh_order", la.closure_adh.size()}}});
  }
  {
    bool ok;
    ojson detail{{"applicable", hypothesis},
                 {"adh_order", la.closure_adh.size()},
                 {"half_order", la.half.size()}};
    if (hypothesis) {
      ok = 2 * la.closure_adh.size() == la.half.elements.size();
    } else {
      ok = la.trivial_half == la.half.elements;
      detail["degenerate_check"] = "half equals trivial half";
    }
    v.claims.push_back({"half_decomp.core_order", ok, std::move(detail)});
  }
  {
    // conjugation stability of the fixing subgroup under A, and under D on
    // nonabelian input (the translation rule leans on the inverted sets)
    const bool translation_part = !la.group().abelian;
    bool ok = true;
    for (std::size_t i = 0; i < la.fixing.elements.size() && ok; ++i) {
      const Perm& h = la.fixing.elements[i];
      for (const Perm& a : la.family_a)
        if (!la.fixing.contains(compose(inverse_perm(a), compose(h, a)))) {
          ok = false;
          break;
        }
      if (!translation_part) continue;
      const auto& gamma = la.fixing_inverted[i].members;
      for (int t = 0; t < la.group().order && ok; ++t) {
        const Perm d_t = coset_translation(la.embedding, t);
        const bool in_gamma =
            std::binary_search(gamma.begin(), gamma.end(), t);
        const Perm conj = in_gamma
                              ? compose(d_t, compose(h, d_t))
                              : compose(inverse_perm(d_t), compose(h, d_t));
        if (!la.fixing.contains(conj)) ok = false;
      }
    }
    v.claims.push_back({"half_decomp.conjugation_stability", ok,
                        ojson{{"fixing_order", la.fixing.size()},
                              {"translation_part", translation_part}}});
  }
  return v;
}

// Central coset translations, the kernel ZH, the quotient DH/ZH against the
// inner automorphism group, and the two order identities.
inline StructureVerdict verify_center_structure(const LoopAnalysis& la) {
  StructureVerdict v;
  const FiniteGroup& g = la.group();
  const bool hypothesis = la.nontrivial_exists;

  const SubgroupDescriptor zg{&g, la.center_members};
  const ElementaryAbelianCheck zc = is_elementary_abelian_2(zg);
  int fixing_rank = -1;
  {
    bool ok = true;
    for (const Perm& f : la.fixing.elements)
      if (!is_identity_perm(compose(f, f))) ok = false;
    const auto size = static_cast<unsigned>(la.fixing.elements.size());
    if (std::has_single_bit(size)) fixing_rank = std::countr_zero(size);
    ok = ok && fixing_rank >= 0;
    v.claims.push_back({"center_structure.fixing_exponent_two", ok,
                        ojson{{"fixing_order", size}, {"rank", fixing_rank}}});
  }
  {
    const bool applicable = hypothesis;
    const bool ok = !applicable || zc.value;
    v.claims.push_back({"center_structure.center_exponent_two", ok,
                        ojson{{"applicable", applicable},
                              {"center_order", zg.order()},
                              {"exponent_two", zc.value}}});
  }
  {
    const bool applicable = !g.abelian;
    bool ok = true;
    if (applicable)
      for (const Perm& z : la.family_z)
        if (!detail::commutes_with_all(z, la.closure_dh)) ok = false;
    v.claims.push_back({"center_structure.central_translations", ok,
                        ojson{{"applicable", applicable},
                              {"z_order", la.family_z.size()},
                              {"dh_order", la.closure_dh.size()}}});
  }
  {
    const bool applicable = hypothesis;
    bool exponent_two = true;
    for (const Perm& f : la.closure_zh)
      if (!is_identity_perm(compose(f, f))) exponent_two = false;
    const long long expected =
        zc.value && fixing_rank >= 0
            ? (1ll << (zc.log2_order + fixing_rank))
            : -1;
    const bool ok = !applicable ||
                    (exponent_two &&
                     static_cast<long long>(la.closure_zh.size()) == expected);
    v.claims.push_back({"center_structure.kernel_exponent_two", ok,
                        ojson{{"applicable", applicable},
                              {"zh_order", la.closure_zh.size()},
                              {"exponent_two", exponent_two},
                              {"expected_order", expected}}});
  }
  {
    bool normal = true;
    for (const Perm& f : la.closure_dh) {
      const Perm fi = inverse_perm(f);
      for (const Perm& k : la.closure_zh)
        if (!sorted_contains(la.closure_zh, compose(f, compose(k, fi)))) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    v.claims.push_back({"center_structure.kernel_normal", normal,
                        ojson{{"dh_order", la.closure_dh.size()},
                              {"zh_order", la.closure_zh.size()}}});
  }
  {
    bool ok = false;
    std::string level = "numeric";
    const long long inner = static_cast<long long>(la.inner_automorphisms.size());
    long long quotient_order = -1;
    try {
      const FiniteGroup q = quotient_group(la.closure_dh, la.closure_zh);
      quotient_order = q.order;
      ok = q.order == inner;
      if (ok && q.order <= kGroupSearchBound) {
        level = "constructive";
        const FiniteGroup ig = permutation_set_group(la.inner_automorphisms);
        ok = isomorphic(q, ig).has_value();
      }
    } catch (const Error&) {
      ok = false;
    }
    v.claims.push_back({"center_structure.quotient_inner", ok,
                        ojson{{"quotient_order", quotient_order},
                              {"inner_order", inner},
                              {"level", level}}});
  }
  const long long aut_g = static_cast<long long>(la.group_automorphisms.size());
  const long long half_order = la.half.size();
  {
    bool ok;
    ojson detail{{"applicable", true}, {"half_order", half_order}};
    if (hypothesis) {
      const long long expected = 2 * aut_g * g.order * la.fixing.size();
      ok = half_order == expected;
      detail["rule"] = "doubled-translation-product";
      detail["expected"] = expected;
    } else if (la.loop_abelian) {
      ok = half_order == la.loop_automorphisms.size();
      detail["rule"] = "abelian-carrier";
      detail["expected"] = la.loop_automorphisms.size();
    } else {
      ok = half_order == 2ll * la.loop_automorphisms.size();
      detail["rule"] = "trivial-only";
      detail["expected"] = 2ll * la.loop_automorphisms.size();
    }
    v.claims.push_back(
        {"center_structure.order_identity", ok, std::move(detail)});
  }
  {
    const bool applicable = hypothesis && zc.value && fixing_rank >= 0;
    bool ok = true;
    long long expected = -1;
    if (applicable) {
      const int n_exp = zc.log2_order + fixing_rank;
      expected = (2ll << n_exp) * aut_g *
                 static_cast<long long>(la.inner_automorphisms.size());
      ok = half_order == expected &&
           static_cast<long long>(la.closure_zh.size()) == (1ll << n_exp);
    }
    v.claims.push_back({"center_structure.order_identity_power", ok,
                        ojson{{"applicable", applicable},
                              {"expected", expected},
                              {"half_order", half_order}}});
  }
  return v;
}

inline StructureVerdict verify_structure(const LoopAnalysis& la) {
  StructureVerdict v = verify_aut_families(la);
  v.append(verify_aut_structure(la));
  v.append(verify_trivial_half(la));
  v.append(verify_half_decomposition(la));
  v.append(verify_center_structure(la));
  return v;
}

}  // namespace loopsmith
