#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "loopsmith/errors.hpp"
#include "loopsmith/perm.hpp"

namespace loopsmith {

using Table = std::vector<std::vector<int>>;

// A finite group given by its Cayley table. After validation the identity
// always sits at index 0, inverses and element orders are cached, and the
// value is immutable and safe to share across threads.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // row-major, table[a*order + b] = a.b
  std::vector<std::string> names;
  std::vector<int> inverses;
  std::vector<int> element_orders;
  bool abelian = false;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverses[a]; }
  // t g t^-1
  int conj(int t, int g) const { return mul(mul(t, g), inverses[t]); }
  int order_of(int g) const { return element_orders[g]; }
};

// A subgroup is just its sorted member set plus the parent it lives in.
struct SubgroupDescriptor {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

struct GroupMapping {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  Perm images;
  bool homomorphism_verified = false;
};

namespace detail {

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

inline void check_latin(const Table& t) {
  const int n = static_cast<int>(t.size());
  if (n < 1) throw NotLatinSquare("empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n)
      throw NotLatinSquare("row " + std::to_string(i) + " has wrong length");
  }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = t[i][j];
      if (v < 0 || v >= n)
        throw NotLatinSquare("entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") out of range");
      if (seen[v])
        throw NotLatinSquare("row " + std::to_string(i) +
                             " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = t[i][j];
      if (seen[v])
        throw NotLatinSquare("column " + std::to_string(j) +
                             " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

inline int find_identity(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

// Relabel so that element e becomes index 0 (swap relabeling).
inline void relocate_identity(Table& t, std::vector<std::string>& names, int e) {
  if (e == 0) return;
  const int n = static_cast<int>(t.size());
  std::vector<int> to_new(n), to_old(n);
  for (int i = 0; i < n; ++i) to_new[i] = i;
  std::swap(to_new[0], to_new[e]);
  to_old = to_new;  // a transposition is its own inverse
  Table fresh(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fresh[i][j] = to_new[t[to_old[i]][to_old[j]]];
  t = std::move(fresh);
  if (!names.empty()) std::swap(names[0], names[e]);
}

}  // namespace detail

// Validates a Cayley table as a group: Latin square, two-sided identity
// (relocated to index 0 if needed), associativity. Caches inverses, element
// orders and the abelian flag.
inline FiniteGroup validate_group(Table table,
                                  std::vector<std::string> names = {}) {
  detail::check_latin(table);
  const int n = static_cast<int>(table.size());
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n)
      throw ValidationError("expected " + std::to_string(n) + " labels");
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("labels are not distinct");
  }

  const int e = detail::find_identity(table);
  if (e < 0) throw NoIdentity("no two-sided identity element");
  detail::relocate_identity(table, names, e);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAssociative("triple (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) +
                               ") violates associativity");

  FiniteGroup g;
  g.order = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i * n + j] = table[i][j];
  g.names = names.empty() ? detail::default_labels(n) : std::move(names);

  g.inverses.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) == 0) {
        g.inverses[i] = j;
        break;
      }

  g.element_orders.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = 1, p = i;
    while (p != 0) {
      p = g.mul(p, i);
      ++k;
    }
    g.element_orders[i] = k;
  }

  g.abelian = true;
  for (int i = 0; i < n && g.abelian; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mul(i, j) != g.mul(j, i)) {
        g.abelian = false;
        break;
      }
  return g;
}

inline SubgroupDescriptor center(const FiniteGroup& g) {
  SubgroupDescriptor s;
  s.parent = &g;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) s.members.push_back(x);
  }
  return s;
}

// Smallest subgroup containing the seed elements.
inline std::vector<int> subgroup_closure(const FiniteGroup& g,
                                         const std::vector<int>& seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> work{0};
  in[0] = 1;
  for (int x : seed)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      const int p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
      const int q = g.mul(work[j], work[i]);
      if (!in[q]) {
        in[q] = 1;
        work.push_back(q);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

// Greedy generating sequence: repeatedly add the lowest-index element not in
// the closure of what has been picked so far. Deterministic by construction.
inline std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> cl{0};
  while (static_cast<int>(cl.size()) < g.order) {
    int next = -1;
    for (int x = 0; x < g.order; ++x)
      if (!std::binary_search(cl.begin(), cl.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    cl = subgroup_closure(g, gens);
  }
  return gens;
}

struct ElementaryAbelianCheck {
  bool value = false;
  int log2_order = 0;  // m with |S| = 2^m, meaningful when value is true
};

// True iff every non-identity member has order 2. Such a subgroup is a
// direct product of m copies of C2.
inline ElementaryAbelianCheck is_elementary_abelian_2(const SubgroupDescriptor& s) {
  ElementaryAbelianCheck r;
  for (int x : s.members)
    if (x != 0 && s.parent->order_of(x) != 2) return r;
  const auto size = static_cast<unsigned>(s.members.size());
  if (!std::has_single_bit(size)) return r;  // cannot happen for closed sets
  r.value = true;
  r.log2_order = std::countr_zero(size);
  return r;
}

namespace detail {

// All index-2 subgroups, each as a sorted member vector, listed in
// lexicographic member-set order. A subgroup of index 2 contains every
// square and every commutator, so index-2 subgroups correspond to the
// hyperplanes of the elementary abelian quotient G / <squares, commutators>.
inline std::vector<std::vector<int>> index_two_subgroups(const FiniteGroup& g) {
  const int n = g.order;
  std::vector<int> seed;
  seed.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int x = 0; x < n; ++x) seed.push_back(g.mul(x, x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      seed.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  const std::vector<int> verbal = subgroup_closure(g, seed);
  const int q = n / static_cast<int>(verbal.size());
  if (q < 2) return {};

  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int v : verbal) coset_of[g.mul(x, v)] = c;
  }
  auto qmul = [&](int a, int b) { return coset_of[g.mul(reps[a], reps[b])]; };

  // The quotient is elementary abelian of order q = 2^d; pick a greedy basis.
  std::vector<int> basis;
  std::vector<char> span(q, 0);
  span[0] = 1;
  int span_size = 1;
  for (int c = 1; c < q && span_size < q; ++c) {
    if (span[c]) continue;
    basis.push_back(c);
    std::vector<int> old;
    for (int x = 0; x < q; ++x)
      if (span[x]) old.push_back(x);
    for (int x : old) {
      const int y = qmul(x, c);
      if (!span[y]) {
        span[y] = 1;
        ++span_size;
      }
    }
  }
  const int d = static_cast<int>(basis.size());

  std::vector<unsigned> coord(q, 0);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    int p = 0;
    for (int b = 0; b < d; ++b)
      if (mask >> b & 1u) p = qmul(p, basis[b]);
    coord[p] = mask;
  }

  std::vector<std::vector<int>> out;
  for (unsigned lambda = 1; lambda < (1u << d); ++lambda) {
    std::vector<int> members;
    members.reserve(n / 2);
    for (int x = 0; x < n; ++x)
      if (std::popcount(lambda & coord[coset_of[x]]) % 2 == 0)
        members.push_back(x);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct GeneralizedDihedralWitness {
  SubgroupDescriptor subgroup;  // abelian index-2 subgroup G0
  int reflector = -1;           // v outside G0 with v^2 = 1 and vgv = g^-1
};

// Scans index-2 subgroups in canonical member-set order and returns the
// first abelian one that admits an inverting involution outside it.
inline std::optional<GeneralizedDihedralWitness>
generalized_dihedral_decomposition(const FiniteGroup& g) {
  for (const auto& members : detail::index_two_subgroups(g)) {
    bool abelian = true;
    for (std::size_t i = 0; i < members.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (g.mul(members[i], members[j]) != g.mul(members[j], members[i])) {
          abelian = false;
          break;
        }
    if (!abelian) continue;
    std::vector<char> inside(g.order, 0);
    for (int m : members) inside[m] = 1;
    for (int v = 0; v < g.order; ++v) {
      if (inside[v] || g.mul(v, v) != 0) continue;
      bool inverts = true;
      for (int m : members)
        if (g.mul(g.mul(v, m), v) != g.inv(m)) {
          inverts = false;
          break;
        }
      if (inverts)
        return GeneralizedDihedralWitness{SubgroupDescriptor{&g, members}, v};
    }
  }
  return std::nullopt;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  Table t(n, std::vector<int>(n));
  for (int i1 = 0; i1 < a.order; ++i1)
    for (int j1 = 0; j1 < b.order; ++j1)
      for (int i2 = 0; i2 < a.order; ++i2)
        for (int j2 = 0; j2 < b.order; ++j2)
          t[i1 * b.order + j1][i2 * b.order + j2] =
              a.mul(i1, i2) * b.order + b.mul(j1, j2);
  std::vector<std::string> names(n);
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < b.order; ++j)
      names[i * b.order + j] = "(" + a.names[i] + "," + b.names[j] + ")";
  return validate_group(std::move(t), std::move(names));
}

inline constexpr int kClosureBound = 512;

// Builds the group generated by the given permutations of a common finite
// set; elements are sorted so the identity lands at index 0.
inline FiniteGroup closure_from_permutations(const std::vector<Perm>& gens,
                                             int bound = kClosureBound) {
  if (gens.empty()) throw ValidationError("no generator permutations given");
  const int m = static_cast<int>(gens.front().size());
  for (const Perm& p : gens)
    if (!is_permutation(p, m))
      throw ValidationError("generators are not permutations of a common set");

  std::vector<Perm> elems{identity_perm(m)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& p : gens) {
      Perm q = compose(elems[i], p);
      if (std::find(elems.begin(), elems.end(), q) == elems.end()) {
        if (static_cast<int>(elems.size()) >= bound)
          throw ClosureBoundExceeded("closure exceeds " + std::to_string(bound) +
                                     " elements");
        elems.push_back(std::move(q));
      }
    }
  std::sort(elems.begin(), elems.end());

  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index_of(compose(elems[i], elems[j]));
  return validate_group(std::move(t));
}

}  // namespace loopsmith
