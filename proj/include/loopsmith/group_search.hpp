#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "loopsmith/detail/search.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/group.hpp"
#include "loopsmith/perm.hpp"

namespace loopsmith {

inline constexpr int kGroupSearchBound = 64;

namespace detail {
inline TableView view(const FiniteGroup& g) {
  return TableView{g.table.data(), g.order};
}
}  // namespace detail

// Complete list of automorphisms, sorted by image sequence. Backtracking on
// generator images with order-preservation and partial-homomorphism pruning.
inline std::vector<Perm> automorphism_group(const FiniteGroup& g,
                                            int bound = kGroupSearchBound) {
  if (g.order > bound)
    throw OrderBoundExceeded("automorphism search bounded at order " +
                             std::to_string(bound));
  detail::HomSearch search(detail::view(g), detail::view(g));
  return search.all();
}

// {I_t : t in G} deduplicated, with I_t(g) = t g t^-1.
inline std::vector<Perm> inner_automorphism_group(const FiniteGroup& g) {
  std::vector<Perm> out;
  out.reserve(g.order);
  for (int t = 0; t < g.order; ++t) {
    Perm p(g.order);
    for (int x = 0; x < g.order; ++x) p[x] = g.conj(t, x);
    out.push_back(std::move(p));
  }
  canonicalize(out);
  return out;
}

inline long long holomorph_order(const FiniteGroup& g,
                                 int bound = kGroupSearchBound) {
  return static_cast<long long>(automorphism_group(g, bound).size()) * g.order;
}

// A witnessing isomorphism found by generator-image backtracking, or absent.
inline std::optional<GroupMapping> isomorphic(const FiniteGroup& a,
                                              const FiniteGroup& b,
                                              int bound = kGroupSearchBound) {
  if (a.order > bound || b.order > bound)
    throw OrderBoundExceeded("isomorphism search bounded at order " +
                             std::to_string(bound));
  if (a.order != b.order) return std::nullopt;
  std::vector<int> oa = a.element_orders, ob = b.element_orders;
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;
  detail::HomSearch search(detail::view(a), detail::view(b));
  auto witness = search.first();
  if (!witness) return std::nullopt;
  return GroupMapping{&a, &b, std::move(*witness), true};
}

// Materializes a sorted set of permutations (closed under composition,
// containing the identity) as a Cayley-table group. The identity permutation
// is lexicographically least, so it lands at index 0.
inline FiniteGroup permutation_set_group(const std::vector<Perm>& elems) {
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& p) {
    const auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p)
      throw ValidationError("permutation set is not closed under composition");
    return static_cast<int>(it - elems.begin());
  };
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i][j] = index_of(compose(elems[i], elems[j]));
  return validate_group(std::move(t));
}

// Quotient of a permutation group by a normal subgroup, materialized as a
// coset Cayley table with cosets sorted by least member index.
inline FiniteGroup quotient_group(const std::vector<Perm>& parent,
                                  const std::vector<Perm>& normal) {
  const int n = static_cast<int>(parent.size());
  auto index_of = [&](const Perm& p) {
    const auto it = std::lower_bound(parent.begin(), parent.end(), p);
    if (it == parent.end() || *it != p)
      throw ValidationError("coset product escapes the parent set");
    return static_cast<int>(it - parent.begin());
  };
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;  // least member index per coset, in discovery order
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (const Perm& z : normal) coset_of[index_of(compose(parent[i], z))] = c;
  }
  const int q = static_cast<int>(reps.size());
  Table t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      t[i][j] = coset_of[index_of(compose(parent[reps[i]], parent[reps[j]]))];
  return validate_group(std::move(t));
}

}  // namespace loopsmith
