#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopsmith/group.hpp"
#include "loopsmith/loop.hpp"

namespace loopsmith {

// The doubled loop L = G u Gu of order 2|G|, together with how it indexes
// into G. Canonical layout: indices 0..|G|-1 are G in the group's own order,
// index |G|+k is (e_k)u; in particular u itself sits at index |G|.
struct CheinEmbedding {
  FiniteGroup group;
  FiniteLoop loop;
  int u_index = 0;

  int group_order() const { return group.order; }
  bool in_coset(int loop_index) const { return loop_index >= group.order; }
  // the group element carried by a loop index (g for g, or g for gu)
  int group_part(int loop_index) const {
    return in_coset(loop_index) ? loop_index - group.order : loop_index;
  }
  int coset_index(int group_element) const { return group.order + group_element; }
};

// Four quadrants:
//   g*h = gh,  g*(hu) = (hg)u,  (gu)*h = (g h^-1)u,  (gu)*(hu) = h^-1 g.
inline CheinEmbedding chein(const FiniteGroup& g) {
  const int n = g.order;
  Table t(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[a][b] = g.mul(a, b);
      t[a][n + b] = n + g.mul(b, a);
      t[n + a][b] = n + g.mul(a, g.inv(b));
      t[n + a][n + b] = g.mul(g.inv(b), a);
    }
  std::vector<std::string> names(2 * n);
  for (int a = 0; a < n; ++a) {
    names[a] = g.names[a];
    names[n + a] = a == 0 ? "u" : g.names[a] + "u";
  }
  CheinEmbedding e;
  e.group = g;
  e.loop = validate_loop(std::move(t), std::move(names));
  e.u_index = n;
  return e;
}

struct Location {
  bool in_coset = false;  // false: the element is g; true: it is gu
  int element = 0;        // the group index of g
};

inline Location locate(const CheinEmbedding& e, int loop_index) {
  if (loop_index < 0 || loop_index >= e.loop.order)
    throw ValidationError("loop index out of range");
  return Location{e.in_coset(loop_index), e.group_part(loop_index)};
}

}  // namespace loopsmith
