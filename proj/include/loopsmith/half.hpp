#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "loopsmith/detail/search.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/loop.hpp"
#include "loopsmith/perm.hpp"

namespace loopsmith {

namespace detail {
inline TableView view(const FiniteLoop& l) {
  return TableView{l.table.data(), l.order};
}
}  // namespace detail

struct HalfCheck {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};  // first violating pair
};

// f(x*y) in {f(x)*f(y), f(y)*f(x)} over all pairs.
inline HalfCheck is_half_automorphism(const FiniteLoop& l, const Perm& f) {
  if (!is_permutation(f, l.order))
    throw ValidationError("mapping is not a bijection of the loop");
  for (int x = 0; x < l.order; ++x)
    for (int y = 0; y < l.order; ++y) {
      const int p = f[l.mul(x, y)];
      if (p != l.mul(f[x], f[y]) && p != l.mul(f[y], f[x]))
        return {false, {x, y}};
    }
  return {};
}

enum class MapKind { Automorphism, AntiAutomorphism, NontrivialHalf };

inline const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::Automorphism: return "automorphism";
    case MapKind::AntiAutomorphism: return "anti-automorphism";
    default: return "nontrivial";
  }
}

struct ClassifiedMapping {
  Perm images;
  MapKind kind = MapKind::Automorphism;
};

// A mapping that is both an automorphism and an anti-automorphism (possible
// when the commuting set is large) is tagged Automorphism.
inline ClassifiedMapping classify(const FiniteLoop& l, const Perm& f) {
  const HalfCheck check = is_half_automorphism(l, f);
  if (!check.ok)
    throw NotHalfAutomorphism(
        "violated at pair (" + std::to_string(check.witness.first) + "," +
        std::to_string(check.witness.second) + ")");
  bool automorphism = true;
  for (int x = 0; x < l.order && automorphism; ++x)
    for (int y = 0; y < l.order; ++y)
      if (f[l.mul(x, y)] != l.mul(f[x], f[y])) {
        automorphism = false;
        break;
      }
  if (automorphism) return {f, MapKind::Automorphism};
  bool anti = true;
  for (int x = 0; x < l.order && anti; ++x)
    for (int y = 0; y < l.order; ++y)
      if (f[l.mul(x, y)] != l.mul(f[y], f[x])) {
        anti = false;
        break;
      }
  return {f, anti ? MapKind::AntiAutomorphism : MapKind::NontrivialHalf};
}

// A set of mappings of one carrier, canonically sorted.
struct HalfGroup {
  std::vector<Perm> elements;
  std::string provenance;  // "brute-force" | "closure-of-parts"

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(const Perm& p) const { return sorted_contains(elements, p); }
};

struct HalfSummary {
  long long total = 0;
  long long automorphisms = 0;
  long long anti_automorphisms = 0;
  long long nontrivial = 0;
};

inline HalfSummary summarize(const FiniteLoop& l, const HalfGroup& set) {
  HalfSummary s;
  s.total = set.size();
  for (const Perm& f : set.elements) {
    switch (classify(l, f).kind) {
      case MapKind::Automorphism: ++s.automorphisms; break;
      case MapKind::AntiAutomorphism: ++s.anti_automorphisms; break;
      case MapKind::NontrivialHalf: ++s.nontrivial; break;
    }
  }
  return s;
}

struct EnumOptions {
  int max_order = 32;  // carrier bound for exhaustive enumeration
  int threads = 1;
};

// All loop automorphisms by backtracking; pruned by element order in the
// loop and by partial-homomorphism failure.
inline HalfGroup enumerate_automorphisms(const FiniteLoop& l,
                                         const EnumOptions& opt = {}) {
  if (l.order > opt.max_order)
    throw OrderBoundExceeded("enumeration bounded at order " +
                             std::to_string(opt.max_order));
  detail::HomSearch search(detail::view(l), detail::view(l));
  return HalfGroup{search.all(), "brute-force"};
}

// Checks that a canonically sorted mapping set is a group: the closure of a
// greedy generating subset must reproduce the set exactly. Linear in
// |set| * generators instead of quadratic in |set|.
inline bool verify_group_closure(const std::vector<Perm>& sorted_set) {
  if (sorted_set.empty()) return false;
  const int n = static_cast<int>(sorted_set.front().size());
  if (!sorted_contains(sorted_set, identity_perm(n))) return false;
  for (const Perm& p : sorted_set)
    if (!sorted_contains(sorted_set, inverse_perm(p))) return false;

  std::unordered_set<Perm, PermHash> closed;
  std::vector<Perm> work{identity_perm(n)};
  std::vector<Perm> gens;
  closed.insert(work.front());
  while (closed.size() < sorted_set.size()) {
    // lexicographically least element not yet generated
    const Perm* next = nullptr;
    for (const Perm& p : sorted_set)
      if (!closed.count(p)) {
        next = &p;
        break;
      }
    gens.push_back(*next);
    closed.insert(*next);
    work.push_back(*next);
    for (std::size_t i = 0; i < work.size(); ++i)
      for (const Perm& g : gens) {
        Perm q = compose(work[i], g);
        if (!sorted_contains(sorted_set, q)) return false;  // escapes the set
        if (closed.insert(q).second) work.push_back(std::move(q));
        q = compose(g, work[i]);
        if (!sorted_contains(sorted_set, q)) return false;
        if (closed.insert(q).second) work.push_back(std::move(q));
      }
  }
  return closed.size() == sorted_set.size();
}

// Exhaustive half-automorphism enumeration. The order filter is enabled only
// on diassociative carriers, where half-automorphisms preserve powers.
inline HalfGroup enumerate_half_automorphisms(const FiniteLoop& l,
                                              const EnumOptions& opt = {}) {
  if (l.order > opt.max_order)
    throw OrderBoundExceeded("enumeration bounded at order " +
                             std::to_string(opt.max_order));
  const bool order_filter = l.order <= 64 && is_diassociative(l);
  detail::HalfSearch search(detail::view(l), order_filter);
  HalfGroup out{search.all(opt.threads), "brute-force"};
  if (!verify_group_closure(out.elements))
    throw Error("enumerated half-automorphisms do not form a group");
  return out;
}

// Closure of seed mappings under composition; the oracle counterpart to the
// backtracking enumeration. Seed elements already generated are skipped, so
// the cost is |closure| times the number of effective generators.
inline HalfGroup mapping_closure(const std::vector<Perm>& seed) {
  if (seed.empty()) throw ValidationError("empty seed for closure");
  const int n = static_cast<int>(seed.front().size());
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> work;
  std::vector<Perm> gens;
  auto push = [&](Perm p) {
    if (seen.insert(p).second) work.push_back(std::move(p));
  };
  push(identity_perm(n));
  for (const Perm& s : seed) {
    if (seen.count(s)) continue;
    gens.push_back(s);
    push(s);
    for (std::size_t i = 0; i < work.size(); ++i)
      for (const Perm& g : gens) {
        push(compose(work[i], g));
        push(compose(g, work[i]));
      }
  }
  std::vector<Perm> elems(work.begin(), work.end());
  canonicalize(elems);
  return HalfGroup{std::move(elems), "closure-of-parts"};
}

}  // namespace loopsmith
