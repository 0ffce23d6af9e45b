#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "loopsmith/perm.hpp"

namespace loopsmith::detail {

// Read-only view of a flat row-major multiplication table.
struct TableView {
  const int* t = nullptr;
  int n = 0;
  int mul(int a, int b) const { return t[a * n + b]; }
};

inline std::vector<int> view_left_orders(const TableView& v) {
  std::vector<int> ord(v.n);
  for (int x = 0; x < v.n; ++x) {
    int k = 1, p = x;
    while (p != 0) {
      p = v.mul(p, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

inline std::vector<int> view_greedy_generators(const TableView& v) {
  auto close = [&](const std::vector<int>& seed) {
    std::vector<char> in(v.n, 0);
    std::vector<int> work{0};
    in[0] = 1;
    for (int x : seed)
      if (!in[x]) {
        in[x] = 1;
        work.push_back(x);
      }
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = 0; j < work.size(); ++j) {
        int p = v.mul(work[i], work[j]);
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
        p = v.mul(work[j], work[i]);
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
      }
    return work;  // unsorted; size is what matters
  };
  std::vector<int> gens;
  std::size_t closed = close(gens).size();
  while (closed < static_cast<std::size_t>(v.n)) {
    std::vector<char> in(v.n, 0);
    for (int x : close(gens)) in[x] = 1;
    for (int x = 0; x < v.n; ++x)
      if (!in[x]) {
        gens.push_back(x);
        break;
      }
    closed = close(gens).size();
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Multiplication-preserving bijections src -> dst (equal orders). Backtracks
// over images of a greedy generating sequence; propagation of f(xy) =
// f(x)f(y) from assigned pairs determines everything else. Candidates are
// pruned by left-power order, which any such bijection preserves.
class HomSearch {
 public:
  HomSearch(TableView src, TableView dst)
      : src_(src),
        dst_(dst),
        src_ord_(view_left_orders(src)),
        dst_ord_(view_left_orders(dst)),
        gens_(view_greedy_generators(src)),
        img_(src.n, -1),
        used_(dst.n, 0) {}

  std::vector<Perm> all() {
    run(false);
    canonicalize(results_);
    return std::move(results_);
  }

  std::optional<Perm> first() {
    run(true);
    if (results_.empty()) return std::nullopt;
    return results_.front();
  }

 private:
  void run(bool first_only) {
    first_only_ = first_only;
    trail_.clear();
    if (assign(0, 0) && propagate(0)) rec(0);
    // roll back the root assignment so the object could be reused
    undo(0);
  }

  bool assign(int x, int v) {
    if (img_[x] != -1) return img_[x] == v;
    if (used_[v] || src_ord_[x] != dst_ord_[v]) return false;
    img_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    return true;
  }

  // Processes trail entries from index `from`, pairing each with every
  // assigned element; forced images grow the trail and are picked up too.
  bool propagate(std::size_t from) {
    for (std::size_t qi = from; qi < trail_.size(); ++qi) {
      const int w = trail_[qi];
      for (std::size_t aj = 0; aj < trail_.size(); ++aj) {
        const int x = trail_[aj];
        if (!assign(src_.mul(w, x), dst_.mul(img_[w], img_[x]))) return false;
        if (!assign(src_.mul(x, w), dst_.mul(img_[x], img_[w]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      used_[img_[x]] = 0;
      img_[x] = -1;
    }
  }

  void rec(std::size_t k) {
    if (stop_) return;
    while (k < gens_.size() && img_[gens_[k]] != -1) ++k;
    if (k == gens_.size()) {
      // generators generate everything, so propagation has filled the map
      results_.emplace_back(img_);
      if (first_only_) stop_ = true;
      return;
    }
    const int x = gens_[k];
    for (int v = 0; v < dst_.n && !stop_; ++v) {
      if (used_[v] || dst_ord_[v] != src_ord_[x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, v) && propagate(mark)) rec(k + 1);
      undo(mark);
    }
  }

  TableView src_, dst_;
  std::vector<int> src_ord_, dst_ord_;
  std::vector<int> gens_;
  std::vector<int> img_;
  std::vector<char> used_;
  std::vector<int> trail_;
  std::vector<Perm> results_;
  bool first_only_ = false;
  bool stop_ = false;
};

// ---------------------------------------------------------------------------
// Half-automorphism enumeration: bijections f of one table with
// f(xy) in {f(x)f(y), f(y)f(x)} for all pairs. Assignment order is the
// identity, then a greedy generating sequence, then the rest by index.
// When both branch options coincide the image of the product is forced;
// otherwise membership is checked once all three images exist. Every
// completed candidate is re-verified over all pairs before being emitted.
class HalfSearch {
 public:
  HalfSearch(TableView t, bool order_filter)
      : t_(t), order_filter_(order_filter), ord_(view_left_orders(t)) {
    pairs_for_.resize(t.n);
    for (int x = 0; x < t.n; ++x)
      for (int y = 0; y < t.n; ++y) pairs_for_[t.mul(x, y)].push_back({x, y});
    const std::vector<int> gens = view_greedy_generators(t);
    std::vector<char> is_gen(t.n, 0);
    for (int g : gens) is_gen[g] = 1;
    positions_ = gens;
    for (int x = 1; x < t.n; ++x)
      if (!is_gen[x]) positions_.push_back(x);
  }

  std::vector<Perm> all(int threads = 1) {
    State root;
    root.img.assign(t_.n, -1);
    root.used.assign(t_.n, 0);
    std::vector<Perm> results;
    if (!assign(root, 0, 0) || !propagate(root, 0)) return results;

    std::size_t k = 0;
    while (k < positions_.size() && root.img[positions_[k]] != -1) ++k;
    if (k == positions_.size()) {
      emit(root, results);
      canonicalize(results);
      return results;
    }
    if (threads <= 1) {
      rec(root, k, results);
      canonicalize(results);
      return results;
    }

    // Split the first real decision level across a small worker pool; each
    // branch owns private state, and the canonical sort makes the merged
    // output independent of scheduling.
    const std::vector<int> cands = candidates(root, positions_[k]);
    std::atomic<std::size_t> next{0};
    std::mutex merge;
    auto worker = [&]() {
      std::vector<Perm> local;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cands.size()) break;
        State branch = root;
        const std::size_t mark = branch.trail.size();
        if (assign(branch, positions_[k], cands[i]) && propagate(branch, mark))
          rec(branch, k + 1, local);
      }
      const std::lock_guard<std::mutex> lock(merge);
      results.insert(results.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    const int nw = std::min<int>(threads, static_cast<int>(cands.size()));
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    canonicalize(results);
    return results;
  }

 private:
  struct State {
    std::vector<int> img;
    std::vector<char> used;
    std::vector<int> trail;
  };

  bool assign(State& s, int x, int v) const {
    if (s.img[x] != -1) return s.img[x] == v;
    if (s.used[v]) return false;
    if (order_filter_ && ord_[x] != ord_[v]) return false;
    s.img[x] = v;
    s.used[v] = 1;
    s.trail.push_back(x);
    return true;
  }

  // Both factors assigned: force the product image when the two options
  // coincide, otherwise check membership if the product is already mapped.
  bool pair_rule(State& s, int x, int y) const {
    const int p = t_.mul(x, y);
    const int q1 = t_.mul(s.img[x], s.img[y]);
    const int q2 = t_.mul(s.img[y], s.img[x]);
    if (q1 == q2) return assign(s, p, q1);
    if (s.img[p] == -1) return true;  // rechecked when p is assigned
    return s.img[p] == q1 || s.img[p] == q2;
  }

  bool propagate(State& s, std::size_t from) const {
    for (std::size_t qi = from; qi < s.trail.size(); ++qi) {
      const int w = s.trail[qi];
      for (std::size_t aj = 0; aj < s.trail.size(); ++aj) {
        const int x = s.trail[aj];
        if (!pair_rule(s, w, x)) return false;
        if (x != w && !pair_rule(s, x, w)) return false;
      }
      // deferred membership checks with w as the product
      for (const auto& [x, y] : pairs_for_[w]) {
        if (s.img[x] == -1 || s.img[y] == -1) continue;
        const int q1 = t_.mul(s.img[x], s.img[y]);
        const int q2 = t_.mul(s.img[y], s.img[x]);
        if (s.img[w] != q1 && s.img[w] != q2) return false;
      }
    }
    return true;
  }

  void undo(State& s, std::size_t mark) const {
    while (s.trail.size() > mark) {
      const int x = s.trail.back();
      s.trail.pop_back();
      s.used[s.img[x]] = 0;
      s.img[x] = -1;
    }
  }

  // Candidate images for z: intersection over assigned factor pairs of the
  // two-sided option sets, or every unused value if no pair binds z yet.
  std::vector<int> candidates(const State& s, int z) const {
    std::vector<int> cands;
    bool bound = false;
    for (const auto& [x, y] : pairs_for_[z]) {
      if (s.img[x] == -1 || s.img[y] == -1) continue;
      const int q1 = t_.mul(s.img[x], s.img[y]);
      const int q2 = t_.mul(s.img[y], s.img[x]);
      if (!bound) {
        bound = true;
        cands.push_back(q1);
        if (q2 != q1) cands.push_back(q2);
      } else {
        std::vector<int> keep;
        for (int c : cands)
          if (c == q1 || c == q2) keep.push_back(c);
        cands = std::move(keep);
      }
      if (cands.empty()) return cands;
    }
    if (!bound) {
      for (int v = 0; v < t_.n; ++v)
        if (!s.used[v] && (!order_filter_ || ord_[v] == ord_[z]))
          cands.push_back(v);
      return cands;
    }
    std::sort(cands.begin(), cands.end());
    return cands;
  }

  void rec(State& s, std::size_t k, std::vector<Perm>& out) const {
    while (k < positions_.size() && s.img[positions_[k]] != -1) ++k;
    if (k == positions_.size()) {
      emit(s, out);
      return;
    }
    const int z = positions_[k];
    for (int v : candidates(s, z)) {
      if (s.used[v]) continue;
      const std::size_t mark = s.trail.size();
      if (assign(s, z, v) && propagate(s, mark)) rec(s, k + 1, out);
      undo(s, mark);
    }
  }

  // Full pair verification; soundness does not rest on the pruning above.
  void emit(const State& s, std::vector<Perm>& out) const {
    for (int x = 0; x < t_.n; ++x)
      for (int y = 0; y < t_.n; ++y) {
        const int p = s.img[t_.mul(x, y)];
        if (p != t_.mul(s.img[x], s.img[y]) &&
            p != t_.mul(s.img[y], s.img[x]))
          return;
      }
    out.emplace_back(s.img);
  }

  TableView t_;
  bool order_filter_;
  std::vector<int> ord_;
  std::vector<std::vector<std::pair<int, int>>> pairs_for_;
  std::vector<int> positions_;
};

}  // namespace loopsmith::detail
