#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace loopsmith {

// A bijection on {0,...,n-1} stored as its image sequence: p[i] is where i
// goes. This is the unit of all enumeration and closure work.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// (f after g)(x) = f(g(x))
inline Perm compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_identity_perm(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool is_permutation(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 14695981039346656037ull;
    for (int v : p) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Canonical form for mapping sets: sorted by image sequence, duplicates out.
inline void canonicalize(std::vector<Perm>& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

inline bool sorted_contains(const std::vector<Perm>& sorted_set, const Perm& p) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), p);
}

}  // namespace loopsmith
