#include "regsynth/constraints/prefix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rs {

namespace {

constexpr int kNone = -1000000;

// Points (r, m) for m in [lo, hi] of a prefix, with equal points merged and strict
// edges from larger to smaller classes.
class WindowDag {
 public:
  WindowDag(const std::vector<Constraint>& prefix, int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
    const int count = n * (hi - lo + 1);
    parent_.resize(static_cast<std::size_t>(count));
    std::iota(parent_.begin(), parent_.end(), 0);
    std::vector<std::pair<int, int>> strict;
    for (int m = lo; m <= hi; ++m)
      for (int r = 0; r < n; ++r)
        for (int k = m; k <= std::min(hi, m + 1); ++k)
          for (int s = 0; s < n; ++s) {
            if (k == m && s <= r) continue;
            int c = cmp(prefix, n, r, m, s, k);
            if (c == 2) continue;
            if (c == 0) unite(id(r, m), id(s, k));
            else if (c > 0) strict.emplace_back(id(r, m), id(s, k));
            else strict.emplace_back(id(s, k), id(r, m));
          }
    // Compact class ids.
    cls_.assign(static_cast<std::size_t>(count), -1);
    int nc = 0;
    for (int p = 0; p < count; ++p) {
      int root = find(p);
      if (cls_[static_cast<std::size_t>(root)] < 0) cls_[static_cast<std::size_t>(root)] = nc++;
      cls_[static_cast<std::size_t>(p)] = cls_[static_cast<std::size_t>(root)];
    }
    succ_.assign(static_cast<std::size_t>(nc), {});
    pred_.assign(static_cast<std::size_t>(nc), {});
    for (auto [u, v] : strict) {
      int a = cls_[static_cast<std::size_t>(u)], b = cls_[static_cast<std::size_t>(v)];
      if (a == b) throw std::invalid_argument("inconsistent prefix: strict cycle among points");
      succ_[static_cast<std::size_t>(a)].push_back(b);
      pred_[static_cast<std::size_t>(b)].push_back(a);
    }
    topo();
  }

  int class_of(int r, int m) const { return cls_[static_cast<std::size_t>(id(r, m))]; }

  // Longest strict path leaving each class.
  std::vector<int> longest_from() const {
    std::vector<int> f(succ_.size(), 0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      for (int b : succ_[static_cast<std::size_t>(*it)])
        f[static_cast<std::size_t>(*it)] = std::max(f[static_cast<std::size_t>(*it)], f[static_cast<std::size_t>(b)] + 1);
    return f;
  }

  // Longest strict path into each class starting from a point of moment lo.
  std::vector<int> longest_from_first_layer() const {
    std::vector<int> g(succ_.size(), kNone);
    for (int r = 0; r < n_; ++r) g[static_cast<std::size_t>(class_of(r, lo_))] = 0;
    for (int a : order_) {
      if (g[static_cast<std::size_t>(a)] == kNone) continue;
      for (int b : succ_[static_cast<std::size_t>(a)])
        g[static_cast<std::size_t>(b)] = std::max(g[static_cast<std::size_t>(b)], g[static_cast<std::size_t>(a)] + 1);
    }
    return g;
  }

  static int cmp(const std::vector<Constraint>& prefix, int n, int r, int m, int s, int k) {
    const int len = static_cast<int>(prefix.size());
    if (len == 0) return r == s ? 0 : 2;
    if (m == k) {
      if (m < len) return prefix[static_cast<std::size_t>(m)].cmp(r, s);
      return prefix[static_cast<std::size_t>(len - 1)].cmp(n + r, n + s);
    }
    if (k == m + 1) return prefix[static_cast<std::size_t>(m)].cmp(r, n + s);
    if (k == m - 1) return prefix[static_cast<std::size_t>(k)].cmp(n + r, s);
    return 2;
  }

 private:
  int n_, lo_, hi_;
  std::vector<int> parent_, cls_, order_;
  std::vector<std::vector<int>> succ_, pred_;

  int id(int r, int m) const { return (m - lo_) * n_ + r; }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

  void topo() {
    std::vector<int> indeg(succ_.size(), 0);
    for (const auto& s : succ_)
      for (int b : s) ++indeg[static_cast<std::size_t>(b)];
    std::vector<int> work;
    for (std::size_t a = 0; a < succ_.size(); ++a)
      if (indeg[a] == 0) work.push_back(static_cast<int>(a));
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      order_.push_back(a);
      for (int b : succ_[static_cast<std::size_t>(a)])
        if (--indeg[static_cast<std::size_t>(b)] == 0) work.push_back(b);
    }
    if (order_.size() != succ_.size()) throw std::invalid_argument("inconsistent prefix: strict cycle among points");
  }
};

}  // namespace

std::optional<std::vector<Valuation>> brute_force_prefix_N(const std::vector<Constraint>& prefix, bool zero_start) {
  const int len = static_cast<int>(prefix.size());
  if (len == 0) return std::vector<Valuation>{};
  const int n = prefix[0].num_registers();
  const long bound = static_cast<long>(n) * (len + 1);
  std::vector<std::vector<long>> vals(static_cast<std::size_t>(len + 1), std::vector<long>(static_cast<std::size_t>(n)));
  // Failed (moment, valuation) pairs.
  std::vector<std::vector<std::vector<long>>> dead(static_cast<std::size_t>(len + 1));

  // Enumerates every valuation of moment m+1 compatible with C_m given vals[m].
  std::function<bool(int)> solve = [&](int m) -> bool {
    if (m == len) return true;
    for (const auto& d : dead[static_cast<std::size_t>(m)])
      if (d == vals[static_cast<std::size_t>(m)]) return false;
    const auto& c = prefix[static_cast<std::size_t>(m)];
    std::vector<long>& next = vals[static_cast<std::size_t>(m + 1)];
    const auto& cur = vals[static_cast<std::size_t>(m)];
    // The current valuation must realize the start order of C_m.
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        long a = cur[static_cast<std::size_t>(r)], b = cur[static_cast<std::size_t>(s)];
        if (c.cmp(r, s) != (a < b ? -1 : (a == b ? 0 : 1))) return false;
      }
    // Assign register values in ascending order of their class in C_m's end order.
    auto classes = c.end().classes();
    std::function<bool(std::size_t, long)> place = [&](std::size_t k, long floor) -> bool {
      if (k == classes.size()) {
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            int want = c.cmp(r, n + s);
            long a = cur[static_cast<std::size_t>(r)], b = next[static_cast<std::size_t>(s)];
            int got = a < b ? -1 : (a == b ? 0 : 1);
            if (want != got) return false;
          }
        return solve(m + 1);
      }
      for (long v = floor; v <= bound; ++v) {
        for (int r : classes[k]) next[static_cast<std::size_t>(r)] = v;
        // Prune on relations to the previous moment.
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) {
          int want = c.cmp(r, n + classes[k][0]);
          long a = cur[static_cast<std::size_t>(r)];
          int got = a < v ? -1 : (a == v ? 0 : 1);
          if (want != got) ok = false;
        }
        if (ok && place(k + 1, v + 1)) return true;
      }
      return false;
    };
    if (place(0, 0)) return true;
    dead[static_cast<std::size_t>(m)].push_back(cur);
    return false;
  };

  std::vector<Valuation> out;
  auto finish = [&] {
    for (const auto& v : vals) {
      Valuation w;
      for (long x : v) w.emplace_back(x);
      out.push_back(w);
    }
  };
  if (zero_start) {
    if (!prefix[0].start().all_equal()) return std::nullopt;
    std::fill(vals[0].begin(), vals[0].end(), 0);
    if (!solve(0)) return std::nullopt;
    finish();
    return out;
  }
  auto classes = prefix[0].start().classes();
  std::function<bool(std::size_t, long)> initial = [&](std::size_t k, long floor) -> bool {
    if (k == classes.size()) return solve(0);
    for (long v = floor; v <= bound; ++v) {
      for (int r : classes[k]) vals[0][static_cast<std::size_t>(r)] = v;
      if (initial(k + 1, v + 1)) return true;
    }
    return false;
  };
  if (!initial(0, 0)) return std::nullopt;
  finish();
  return out;
}

std::optional<int> two_way_chain_depth(const std::vector<Constraint>& prefix, const std::vector<ChainStep>& chain) {
  if (prefix.empty()) return std::nullopt;
  const int n = prefix[0].num_registers();
  const int len = static_cast<int>(prefix.size());
  int depth = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& a = chain[i];
    if (a.reg < 0 || a.reg >= n || a.moment < 0 || a.moment > len) return std::nullopt;
    if (i + 1 == chain.size()) break;
    const auto& b = chain[i + 1];
    if (b.reg < 0 || b.reg >= n || b.moment < 0 || b.moment > len) return std::nullopt;
    int c = WindowDag::cmp(prefix, n, a.reg, a.moment, b.reg, b.moment);
    if (c == 2) return std::nullopt;
    if (c != (a.strict_to_next ? 1 : 0)) return std::nullopt;
    depth += a.strict_to_next ? 1 : 0;
  }
  return depth;
}

int max_r2w_depth(const std::vector<Constraint>& prefix) {
  if (prefix.empty()) return 0;
  const int n = prefix[0].num_registers();
  const int len = static_cast<int>(prefix.size());
  int best = 0;
  for (int i = 0; i <= len; ++i) {
    WindowDag dag(prefix, n, i, len);
    auto f = dag.longest_from();
    for (int r = 0; r < n; ++r) best = std::max(best, f[static_cast<std::size_t>(dag.class_of(r, i))]);
  }
  return best;
}

int connecting_depth(const std::vector<Constraint>& prefix, int x, int y) {
  if (prefix.empty()) throw std::invalid_argument("connecting_depth: empty prefix");
  const int n = prefix[0].num_registers();
  const int m = static_cast<int>(prefix.size());
  if (prefix.back().cmp(n + x, n + y) <= 0) throw std::invalid_argument("connecting_depth: requires x > y");
  int best = kNone;
  for (int i = 0; i <= m; ++i) {
    WindowDag dag(prefix, n, i, m);
    auto f = dag.longest_from();
    auto g = dag.longest_from_first_layer();
    int alpha = g[static_cast<std::size_t>(dag.class_of(x, m))];
    if (alpha == kNone) continue;
    int beta = f[static_cast<std::size_t>(dag.class_of(y, m))];
    best = std::max(best, alpha + 1 + beta);
  }
  return best;
}

std::vector<std::vector<int>> connecting_depths(const std::vector<Constraint>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("connecting_depths: empty prefix");
  const int n = prefix[0].num_registers();
  const int m = static_cast<int>(prefix.size());
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i <= m; ++i) {
    WindowDag dag(prefix, n, i, m);
    auto f = dag.longest_from();
    auto g = dag.longest_from_first_layer();
    for (int x = 0; x < n; ++x) {
      int alpha = g[static_cast<std::size_t>(dag.class_of(x, m))];
      if (alpha == kNone) continue;
      for (int y = 0; y < n; ++y) {
        if (prefix.back().cmp(n + x, n + y) <= 0) continue;
        int beta = f[static_cast<std::size_t>(dag.class_of(y, m))];
        auto& slot = d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        slot = std::max(slot, alpha + 1 + beta);
      }
    }
  }
  return d;
}

}  // namespace rs
