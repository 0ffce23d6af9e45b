#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopsmith/errors.hpp"
#include "loopsmith/group.hpp"
#include "loopsmith/perm.hpp"

namespace loopsmith {

// A finite loop: Latin square with a two-sided identity at index 0.
// No associativity requirement.
struct FiniteLoop {
  int order = 0;
  std::vector<int> table;  // row-major
  std::vector<std::string> names;
  // Present iff every element has a two-sided inverse.
  std::optional<std::vector<int>> two_sided_inverses;

  int mul(int a, int b) const { return table[a * order + b]; }
};

// Validates Latin square + identity (relocated to index 0 if needed);
// associativity is not checked.
inline FiniteLoop validate_loop(Table table,
                                std::vector<std::string> names = {}) {
  detail::check_latin(table);
  const int n = static_cast<int>(table.size());
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw ValidationError("expected " + std::to_string(n) + " labels");
  const int e = detail::find_identity(table);
  if (e < 0) throw NoIdentity("no two-sided identity element");
  detail::relocate_identity(table, names, e);

  FiniteLoop l;
  l.order = n;
  l.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l.table[i * n + j] = table[i][j];
  l.names = names.empty() ? detail::default_labels(n) : std::move(names);

  std::vector<int> inv(n);
  bool two_sided = true;
  for (int x = 0; x < n && two_sided; ++x) {
    int right = -1, left = -1;
    for (int y = 0; y < n; ++y) {
      if (l.mul(x, y) == 0) right = y;
      if (l.mul(y, x) == 0) left = y;
    }
    if (right != left) two_sided = false;
    inv[x] = right;
  }
  if (two_sided) l.two_sided_inverses = std::move(inv);
  return l;
}

inline FiniteLoop as_loop(const FiniteGroup& g) {
  FiniteLoop l;
  l.order = g.order;
  l.table = g.table;
  l.names = g.names;
  l.two_sided_inverses = g.inverses;
  return l;
}

struct TripleCheck {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};  // first violating triple
};

// Checks x(y(xz)) = ((xy)x)z over all triples.
inline TripleCheck is_moufang(const FiniteLoop& l) {
  const int n = l.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.mul(x, l.mul(y, l.mul(x, z))) !=
            l.mul(l.mul(l.mul(x, y), x), z))
          return {false, {x, y, z}};
  return {};
}

inline TripleCheck is_associative(const FiniteLoop& l) {
  const int n = l.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z)))
          return {false, {x, y, z}};
  return {};
}

// Smallest product-closed subset containing the seed and the identity.
// In a finite loop closure under the product already gives a subloop.
inline std::vector<int> subloop_closure(const FiniteLoop& l,
                                        const std::vector<int>& seed) {
  std::vector<char> in(l.order, 0);
  std::vector<int> work{0};
  in[0] = 1;
  for (int x : seed)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      const int p = l.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
      const int q = l.mul(work[j], work[i]);
      if (!in[q]) {
        in[q] = 1;
        work.push_back(q);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

inline std::vector<int> greedy_loop_generators(const FiniteLoop& l) {
  std::vector<int> gens;
  std::vector<int> cl{0};
  while (static_cast<int>(cl.size()) < l.order) {
    int next = -1;
    for (int x = 0; x < l.order; ++x)
      if (!std::binary_search(cl.begin(), cl.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    cl = subloop_closure(l, gens);
  }
  return gens;
}

// Every 2-generated subloop is closed off and tested for associativity.
inline bool is_diassociative(const FiniteLoop& l, int bound = 64) {
  if (l.order > bound)
    throw OrderBoundExceeded("diassociativity check bounded at order " +
                             std::to_string(bound));
  for (int x = 0; x < l.order; ++x)
    for (int y = x; y < l.order; ++y) {
      const std::vector<int> sub = subloop_closure(l, {x, y});
      for (int a : sub)
        for (int b : sub)
          for (int c : sub)
            if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c))) return false;
    }
  return true;
}

// (xy)^-1 = y^-1 x^-1 over all pairs.
inline bool has_aaip(const FiniteLoop& l) {
  if (!l.two_sided_inverses)
    throw NoTwoSidedInverses("loop has one-sided inverses only");
  const auto& inv = *l.two_sided_inverses;
  for (int x = 0; x < l.order; ++x)
    for (int y = 0; y < l.order; ++y)
      if (inv[l.mul(x, y)] != l.mul(inv[y], inv[x])) return false;
  return true;
}

inline Perm inversion_mapping(const FiniteLoop& l) {
  if (!l.two_sided_inverses)
    throw NoTwoSidedInverses("loop has one-sided inverses only");
  return *l.two_sided_inverses;
}

inline std::vector<std::pair<int, int>> commuting_pairs(const FiniteLoop& l) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < l.order; ++x)
    for (int y = x + 1; y < l.order; ++y)
      if (l.mul(x, y) == l.mul(y, x)) out.emplace_back(x, y);
  return out;
}

// Left-power order: least k with x^[k] = 1 where x^[k+1] = x^[k] * x.
// Agrees with the usual element order on groups and diassociative loops,
// and is preserved by every loop automorphism.
inline std::vector<int> left_orders(const FiniteLoop& l) {
  std::vector<int> ord(l.order);
  for (int x = 0; x < l.order; ++x) {
    int k = 1, p = x;
    while (p != 0) {
      p = l.mul(p, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

}  // namespace loopsmith
