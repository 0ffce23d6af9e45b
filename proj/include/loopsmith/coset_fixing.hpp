#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopsmith/chein.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/half.hpp"

namespace loopsmith {

namespace detail {

// Builds the candidate mapping that fixes G and u and sends gu to g^eps(g) u.
inline Perm sign_assignment_to_perm(const CheinEmbedding& e,
                                    const std::vector<char>& flip) {
  const int n = e.group.order;
  Perm f = identity_perm(2 * n);
  for (int g = 0; g < n; ++g)
    if (flip[g]) f[n + g] = n + e.group.inv(g);
  return f;
}

// Sign-search constraint from the pair (xu, yu): the fixed value y^-1 x must
// stay reachable, i.e. y^-1 x in { y^-eps(y) x^eps(x), x^-eps(x) y^eps(y) }.
// Pairs with neither side flipped satisfy it trivially.
inline bool sign_pair_ok(const FiniteGroup& g, int x, bool fx, int y, bool fy) {
  if (!fx && !fy) return true;
  const int xs = fx ? g.inv(x) : x;
  const int ys = fy ? g.inv(y) : y;
  const int lhs = g.mul(g.inv(y), x);
  return lhs == g.mul(g.inv(ys), xs) || lhs == g.mul(g.inv(xs), ys);
}

}  // namespace detail

// The subgroup of half-automorphisms fixing the group part pointwise and
// fixing u. Candidates are sign assignments on the coset: each gu maps to gu
// or g^-1 u, and a bijection must flip x and x^-1 together, so the search
// runs over inverse pairs. On nonabelian input only order-4 elements are
// eligible for inversion (coset images of other elements are pinned); that
// restriction is a theorem about nonabelian groups, so abelian input falls
// back to every non-involution pair. Every survivor of the search is
// verified by the full pair check, and the resulting set is verified to be
// a group.
//
// Above `plain_limit` eligible elements, plain enumeration of sign vectors
// is replaced by backtracking that propagates the coset-translation
// constraint (on nonabelian input a flipped x forces xg and gx flipped for
// every g of order != 4) and the pairwise reachability constraint.
inline HalfGroup coset_fixing_subgroup(const CheinEmbedding& e,
                                       int plain_limit = 20) {
  const FiniteGroup& g = e.group;
  const int n = g.order;

  std::vector<int> eligible;
  for (int x = 0; x < n; ++x)
    if (g.abelian ? g.inv(x) != x : g.order_of(x) == 4) eligible.push_back(x);
  std::vector<std::pair<int, int>> classes;  // {x, x^-1} with x < x^-1
  for (int x : eligible)
    if (x < g.inv(x)) classes.push_back({x, g.inv(x)});

  std::vector<Perm> found;
  std::vector<char> flip(n, 0);
  auto try_candidate = [&]() {
    Perm f = detail::sign_assignment_to_perm(e, flip);
    if (is_half_automorphism(e.loop, f).ok) found.push_back(std::move(f));
  };

  if (static_cast<int>(eligible.size()) <= plain_limit) {
    const std::size_t k = classes.size();
    for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
      std::fill(flip.begin(), flip.end(), 0);
      for (std::size_t c = 0; c < k; ++c)
        if (mask >> c & 1ull) {
          flip[classes[c].first] = 1;
          flip[classes[c].second] = 1;
        }
      try_candidate();
    }
  } else {
    std::vector<char> decided(n, 1);
    for (int x : eligible) decided[x] = 0;
    std::vector<int> trail;

    auto decide = [&](int x, char value, bool& conflict) {
      // decides the whole inverse pair {x, x^-1}
      for (int m : {x, g.inv(x)}) {
        if (decided[m]) {
          if (flip[m] != value) conflict = true;
          continue;
        }
        decided[m] = 1;
        flip[m] = value;
        trail.push_back(m);
      }
    };

    auto check_and_propagate = [&](std::size_t from) {
      for (std::size_t qi = from; qi < trail.size(); ++qi) {
        const int x = trail[qi];
        for (int y = 0; y < n; ++y) {
          if (!decided[y]) continue;
          if (!detail::sign_pair_ok(g, x, flip[x], y, flip[y]) ||
              !detail::sign_pair_ok(g, y, flip[y], x, flip[x]))
            return false;
        }
        if (!flip[x] || g.abelian) continue;
        // translation by any non-order-4 element keeps the flipped set fixed
        bool conflict = false;
        for (int t = 0; t < n && !conflict; ++t) {
          if (g.order_of(t) == 4) continue;
          for (int p : {g.mul(x, t), g.mul(t, x)}) {
            if (g.order_of(p) != 4) {
              conflict = true;
              break;
            }
            decide(p, 1, conflict);
            if (conflict) break;
          }
        }
        if (conflict) return false;
      }
      return true;
    };

    auto rec = [&](auto&& self, std::size_t ci) -> void {
      if (ci == classes.size()) {
        try_candidate();
        return;
      }
      const int x = classes[ci].first;
      if (decided[x]) {
        self(self, ci + 1);
        return;
      }
      for (char value : {char(0), char(1)}) {
        const std::size_t mark = trail.size();
        bool conflict = false;
        decide(x, value, conflict);
        if (!conflict && check_and_propagate(mark)) self(self, ci + 1);
        while (trail.size() > mark) {
          decided[trail.back()] = 0;
          trail.pop_back();
        }
      }
    };
    rec(rec, 0);
  }

  canonicalize(found);
  HalfGroup out{std::move(found), "brute-force"};
  if (!verify_group_closure(out.elements))
    throw Error("coset-fixing mappings do not form a group");
  return out;
}

// The order-4 elements whose coset images are inverted by phi.
struct InvertedSet {
  Perm phi;
  std::vector<int> members;
};

inline InvertedSet inverted_set(const CheinEmbedding& e, const Perm& phi) {
  const int n = e.group.order;
  if (!is_permutation(phi, e.loop.order))
    throw NotCosetFixing("mapping is not a bijection of the loop");
  for (int x = 0; x < n; ++x)
    if (phi[x] != x)
      throw NotCosetFixing("mapping moves a group element");
  if (phi[e.u_index] != e.u_index) throw NotCosetFixing("mapping moves u");
  if (!is_half_automorphism(e.loop, phi).ok)
    throw NotCosetFixing("mapping is not a half-automorphism");
  InvertedSet out;
  out.phi = phi;
  for (int x = 0; x < n; ++x)
    if (e.group.order_of(x) == 4 && phi[n + x] == n + e.group.inv(x))
      out.members.push_back(x);
  return out;
}

// Least element satisfying the three necessary conditions that a nontrivial
// half-automorphism of the doubled loop imposes on a nonabelian group:
// o(x) = 4, x^2 central, and x inverts every element of order not in {2,4}.
// Absence certifies that every half-automorphism of M(G,2) is trivial.
inline std::optional<int> nontriviality_witness(const FiniteGroup& g) {
  if (g.abelian)
    throw AbelianInput("witness scan applies to nonabelian groups");
  const SubgroupDescriptor z = center(g);
  for (int x = 0; x < g.order; ++x) {
    if (g.order_of(x) != 4) continue;
    if (!z.contains(g.mul(x, x))) continue;
    bool ok = true;
    for (int y = 0; y < g.order && ok; ++y) {
      const int o = g.order_of(y);
      if (o == 2 || o == 4) continue;
      ok = g.mul(g.mul(g.inv(x), y), x) == g.inv(y);
    }
    if (ok) return x;
  }
  return std::nullopt;
}

// Least y of order 4 such that every factorization y = gh has an order-4
// factor, or absent.
inline std::optional<int> factorization_witness(const FiniteGroup& g) {
  for (int y = 0; y < g.order; ++y) {
    if (g.order_of(y) != 4) continue;
    bool ok = true;
    for (int a = 0; a < g.order && ok; ++a) {
      const int b = g.mul(g.inv(a), y);  // y = a b
      ok = g.order_of(a) == 4 || g.order_of(b) == 4;
    }
    if (ok) return y;
  }
  return std::nullopt;
}

}  // namespace loopsmith
