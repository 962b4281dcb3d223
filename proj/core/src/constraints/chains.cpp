#include "regsynth/constraints/chains.hpp"

#include "regsynth/core/graph.hpp"

#include <functional>

namespace rs {

namespace {

struct WeightedGraph {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<bool>> strict;  // parallel to adj

  explicit WeightedGraph(std::size_t n) : adj(n), strict(n) {}
  void add(int u, int v, bool s) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    strict[static_cast<std::size_t>(u)].push_back(s);
  }
  // True iff some strict edge lies inside a strongly connected component.
  bool strict_cycle() const {
    auto comp = scc_ids(adj);
    for (std::size_t u = 0; u < adj.size(); ++u)
      for (std::size_t k = 0; k < adj[u].size(); ++k)
        if (strict[u][k] && comp[u] == comp[static_cast<std::size_t>(adj[u][k])]) return true;
    return false;
  }
};

// Loop graph over (register, loop position); `dir` is +1 for decreasing chains
// (edges follow >=) and -1 for increasing chains (edges follow <=).
bool infinite_1w(const LassoConstraintSeq& seq, int dir) {
  const int n = seq.num_registers();
  const int len = static_cast<int>(seq.loop.size());
  if (len == 0) return false;
  WeightedGraph g(static_cast<std::size_t>(n * len));
  auto id = [&](int r, int p) { return p * n + r; };
  for (int p = 0; p < len; ++p) {
    const auto& c = seq.loop[static_cast<std::size_t>(p)];
    const int q = (p + 1) % len;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int same = dir * c.cmp(x, y);
        if (x != y && same >= 0) g.add(id(x, p), id(y, p), same > 0);
        int next = dir * c.cmp(x, n + y);
        if (next >= 0) g.add(id(x, p), id(y, q), next > 0);
      }
  }
  return g.strict_cycle();
}

// Reachability over moments 0..count-1 where `letter(m)` is the constraint read at
// moment m and `succ(m)` the next moment (or -1 at the end of a finite prefix).
bool decrease_from_zero(int n, int count, const std::function<const Constraint&(int)>& letter,
                        const std::function<int(int)>& succ, bool final_moment) {
  // Nodes (r, m) for m < count; with final_moment an extra moment `count` closes a prefix.
  const int moments = count + (final_moment ? 1 : 0);
  std::vector<bool> seen(static_cast<std::size_t>(n * moments), false);
  std::vector<int> work;
  for (int r = 0; r < n; ++r) {
    seen[static_cast<std::size_t>(r)] = true;
    work.push_back(r);
  }
  while (!work.empty()) {
    int node = work.back();
    work.pop_back();
    int x = node % n, m = node / n;
    auto visit = [&](int y, int mm) {
      auto k = static_cast<std::size_t>(mm * n + y);
      if (!seen[k]) {
        seen[k] = true;
        work.push_back(mm * n + y);
      }
    };
    if (m == count) {
      // Final moment of a prefix: only same-moment relations from the last end order.
      const auto& c = letter(count - 1);
      for (int y = 0; y < n; ++y) {
        int s = c.cmp(n + x, n + y);
        if (s > 0) return true;
        if (s == 0) visit(y, m);
      }
      continue;
    }
    const auto& c = letter(m);
    int nm = succ(m);
    for (int y = 0; y < n; ++y) {
      int s = c.cmp(x, y);
      if (s > 0) return true;
      if (s == 0) visit(y, m);
      int t = c.cmp(x, n + y);
      if (t > 0) return true;
      if (t == 0 && nm >= 0) visit(y, nm);
    }
  }
  return false;
}

}  // namespace

bool has_infinite_decreasing_1w(const LassoConstraintSeq& seq) { return infinite_1w(seq, +1); }
bool has_infinite_increasing_1w(const LassoConstraintSeq& seq) { return infinite_1w(seq, -1); }

int StableChain::register_at(std::size_t k) const {
  if (k < lead.size()) return lead[k];
  return cycle[(k - lead.size()) % cycle.size()];
}

std::optional<StableChain> maximal_stable_chain(const LassoConstraintSeq& seq) {
  const int n = seq.num_registers();
  const int len = static_cast<int>(seq.loop.size());
  if (len == 0 || n == 0) return std::nullopt;
  auto id = [&](int r, int p) { return p * n + r; };
  std::vector<std::vector<int>> eq(static_cast<std::size_t>(n * len)), rev(eq.size());
  for (int p = 0; p < len; ++p) {
    const auto& c = seq.loop[static_cast<std::size_t>(p)];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (c.cmp(x, n + y) == 0) {
          eq[static_cast<std::size_t>(id(x, p))].push_back(id(y, (p + 1) % len));
          rev[static_cast<std::size_t>(id(y, (p + 1) % len))].push_back(id(x, p));
        }
  }
  // Nodes on an equality cycle, then everything that reaches one.
  auto comp = scc_ids(eq);
  std::vector<int> size(eq.size(), 0);
  for (int c : comp) ++size[static_cast<std::size_t>(c)];
  std::vector<int> cyclic;
  for (std::size_t u = 0; u < eq.size(); ++u) {
    bool self = false;
    for (int v : eq[u]) self |= (v == static_cast<int>(u));
    if (self || size[static_cast<std::size_t>(comp[u])] > 1) cyclic.push_back(static_cast<int>(u));
  }
  auto infinite = reachable_from(rev, cyclic);
  const auto& c0 = seq.loop[0];
  int top = -1;
  for (int r = 0; r < n; ++r) {
    if (!infinite[static_cast<std::size_t>(id(r, 0))]) continue;
    if (top < 0 || c0.cmp(r, top) > 0) top = r;
  }
  if (top < 0) return std::nullopt;
  StableChain chain;
  chain.start_moment = seq.prefix.size();
  std::vector<int> path;
  std::vector<int> first_visit(eq.size(), -1);
  int node = id(top, 0);
  while (first_visit[static_cast<std::size_t>(node)] < 0) {
    first_visit[static_cast<std::size_t>(node)] = static_cast<int>(path.size());
    path.push_back(node % n);
    int next = -1;
    for (int v : eq[static_cast<std::size_t>(node)])
      if (infinite[static_cast<std::size_t>(v)] && (next < 0 || v % n < next % n)) next = v;
    node = next;
  }
  const int loop_at = first_visit[static_cast<std::size_t>(node)];
  chain.lead.assign(path.begin(), path.begin() + loop_at);
  chain.cycle.assign(path.begin() + loop_at, path.end());
  return chain;
}

bool has_trespassing_infinite_increasing_1w(const LassoConstraintSeq& seq) {
  const int n = seq.num_registers();
  const int len = static_cast<int>(seq.loop.size());
  if (len == 0) return false;
  // Node (s, r, p): s carries the stable chain, r the increasing chain strictly below it.
  auto id = [&](int s, int r, int p) { return (p * n + s) * n + r; };
  WeightedGraph g(static_cast<std::size_t>(n * n * len));
  for (int p = 0; p < len; ++p) {
    const auto& c = seq.loop[static_cast<std::size_t>(p)];
    const int q = (p + 1) % len;
    for (int s = 0; s < n; ++s)
      for (int r = 0; r < n; ++r) {
        if (c.cmp(r, s) >= 0) continue;
        for (int t = 0; t < n; ++t) {
          if (c.cmp(s, n + t) != 0) continue;
          for (int x = 0; x < n; ++x) {
            if (c.cmp(n + x, n + t) >= 0) continue;
            int step = c.cmp(r, n + x);
            if (step <= 0) g.add(id(s, r, p), id(t, x, q), step < 0);
          }
        }
      }
  }
  return g.strict_cycle();
}

ZeroStart zero_start_checks(const LassoConstraintSeq& seq) {
  ZeroStart z;
  if (seq.loop.empty()) return z;
  z.c0_all_equal = seq.at(0).start().all_equal();
  const int total = static_cast<int>(seq.prefix.size() + seq.loop.size());
  const int entry = static_cast<int>(seq.prefix.size());
  z.has_decrease_from_0 = decrease_from_zero(
      seq.num_registers(), total, [&](int m) -> const Constraint& { return seq.at(static_cast<std::size_t>(m)); },
      [&](int m) { return m + 1 < total ? m + 1 : entry; }, false);
  return z;
}

ZeroStart zero_start_checks(const std::vector<Constraint>& prefix) {
  ZeroStart z;
  if (prefix.empty()) {
    z.c0_all_equal = true;
    return z;
  }
  z.c0_all_equal = prefix[0].start().all_equal();
  const int total = static_cast<int>(prefix.size());
  z.has_decrease_from_0 = decrease_from_zero(
      prefix[0].num_registers(), total,
      [&](int m) -> const Constraint& { return prefix[static_cast<std::size_t>(m)]; },
      [&](int m) { return m + 1; }, true);
  return z;
}

ChainVerdictN chain_verdict_N(const LassoConstraintSeq& seq) {
  ChainVerdictN v;
  v.consistent = seq.consistent();
  v.has_inf_decreasing_1w = has_infinite_decreasing_1w(seq);
  v.has_trespassing_inf_increasing_1w = has_trespassing_infinite_increasing_1w(seq);
  auto z = zero_start_checks(seq);
  v.c0_all_equal = z.c0_all_equal;
  v.has_decrease_from_0 = z.has_decrease_from_0;
  return v;
}

bool is_zero_satisfiable_N(const LassoConstraintSeq& seq) { return chain_verdict_N(seq).zero_satisfiable(); }
bool is_satisfiable_N(const LassoConstraintSeq& seq) { return chain_verdict_N(seq).satisfiable(); }
bool is_satisfiable_Q(const LassoConstraintSeq& seq) { return seq.consistent(); }
bool is_zero_satisfiable_Q(const LassoConstraintSeq& seq) {
  return seq.consistent() && seq.at(0).start().all_equal();
}

PrefixVerdict prefix_verdict(const std::vector<Constraint>& prefix) {
  PrefixVerdict v;
  v.consistent = prefix_consistent(prefix);
  v.zero = zero_start_checks(prefix);
  return v;
}

}  // namespace rs
