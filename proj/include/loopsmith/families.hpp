#pragma once

#include <array>
#include <string>
#include <vector>

#include "loopsmith/chein.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/group.hpp"
#include "loopsmith/perm.hpp"

namespace loopsmith {

// Extends a group automorphism phi over the doubled loop: gu^i -> phi(g)u^i.
inline Perm lift_automorphism(const CheinEmbedding& e, const Perm& phi) {
  const int n = e.group.order;
  if (!is_permutation(phi, n))
    throw ValidationError("not a bijection of the group");
  Perm f(2 * n);
  for (int g = 0; g < n; ++g) {
    f[g] = phi[g];
    f[n + g] = n + phi[g];
  }
  return f;
}

// Fixes G pointwise and translates the coset: gu -> (tg)u.
inline Perm coset_translation(const CheinEmbedding& e, int t) {
  const int n = e.group.order;
  if (t < 0 || t >= n) throw ValidationError("translation element out of range");
  Perm f(2 * n);
  for (int g = 0; g < n; ++g) {
    f[g] = g;
    f[n + g] = n + e.group.mul(t, g);
  }
  return f;
}

// For generalized dihedral G = G0 u G0v the loop splits as G0 K with
// K = {1, u, v, w = uv}; alpha is a permutation of the K slots fixing 1,
// and the map sends g*x to g*alpha(x).
inline Perm klein_component_map(const CheinEmbedding& e,
                                const SubgroupDescriptor& g0, int v,
                                const std::array<int, 4>& alpha) {
  const int n = e.group.order;
  if (2 * g0.order() != n || !g0.contains(0))
    throw NotGeneralizedDihedral("subgroup is not index 2");
  if (alpha[0] != 0) throw ValidationError("alpha must fix the identity slot");
  {
    std::array<char, 4> seen{};
    for (int s : alpha) {
      if (s < 0 || s > 3 || seen[s])
        throw ValidationError("alpha is not a permutation of the K slots");
      seen[s] = 1;
    }
  }
  const std::array<int, 4> k = {0, e.u_index, v, e.u_index + v};
  Perm f(2 * n);
  for (int l = 0; l < 2 * n; ++l) {
    int g, slot;
    if (l < n) {
      if (g0.contains(l)) {
        g = l;
        slot = 0;
      } else {
        g = e.group.mul(l, v);  // l = g v and v^2 = 1
        slot = 2;
      }
    } else {
      const int h = l - n;  // l = hu
      if (g0.contains(h)) {
        g = h;
        slot = 1;
      } else {
        g = e.group.mul(v, h);  // hu = g*(vu) with h = vg
        slot = 3;
      }
    }
    f[l] = e.loop.mul(g, k[alpha[slot]]);
  }
  return f;
}

struct NamedFamily {
  char label = '?';  // one of A, D, S, Z, H, J
  std::vector<Perm> members;
  std::string provenance;
};

inline NamedFamily lifted_automorphism_family(const CheinEmbedding& e,
                                              const std::vector<Perm>& aut_g) {
  NamedFamily fam{'A', {}, "lifted group automorphisms"};
  fam.members.reserve(aut_g.size());
  for (const Perm& phi : aut_g) fam.members.push_back(lift_automorphism(e, phi));
  canonicalize(fam.members);
  return fam;
}

inline NamedFamily coset_translation_family(const CheinEmbedding& e) {
  NamedFamily fam{'D', {}, "coset translations"};
  fam.members.reserve(e.group.order);
  for (int t = 0; t < e.group.order; ++t)
    fam.members.push_back(coset_translation(e, t));
  canonicalize(fam.members);
  return fam;
}

inline NamedFamily central_translation_family(const CheinEmbedding& e) {
  NamedFamily fam{'Z', {}, "central coset translations"};
  for (int z : center(e.group).members)
    fam.members.push_back(coset_translation(e, z));
  canonicalize(fam.members);
  return fam;
}

// All six Klein-component relabelings; defined only on generalized dihedral
// input.
inline NamedFamily klein_component_family(const CheinEmbedding& e,
                                          const SubgroupDescriptor& g0,
                                          int v) {
  NamedFamily fam{'S', {}, "Klein-component relabelings"};
  std::array<int, 3> slots = {1, 2, 3};
  do {
    const std::array<int, 4> alpha = {0, slots[0], slots[1], slots[2]};
    fam.members.push_back(klein_component_map(e, g0, v, alpha));
  } while (std::next_permutation(slots.begin(), slots.end()));
  canonicalize(fam.members);
  return fam;
}

// The set product {a . b : a in A, b in B}, canonically sorted.
inline std::vector<Perm> set_product(const std::vector<Perm>& a,
                                     const std::vector<Perm>& b) {
  std::vector<Perm> out;
  out.reserve(a.size() * b.size());
  for (const Perm& x : a)
    for (const Perm& y : b) out.push_back(compose(x, y));
  canonicalize(out);
  return out;
}

}  // namespace loopsmith
