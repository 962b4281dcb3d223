#include "regsynth/constraints/maxplus.hpp"

#include "regsynth/core/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace rs {

MaxPlusMatrix::MaxPlusMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim * dim), kNeg) {}

MaxPlusMatrix MaxPlusMatrix::identity(int dim) {
  MaxPlusMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 0);
  return m;
}

void MaxPlusMatrix::raise(int i, int j, std::int64_t w) {
  auto& x = a_[static_cast<std::size_t>(i * dim_ + j)];
  x = std::max(x, w);
}

MaxPlusMatrix MaxPlusMatrix::operator*(const MaxPlusMatrix& rhs) const {
  MaxPlusMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      std::int64_t a = at(i, k);
      if (a == kNeg) continue;
      for (int j = 0; j < dim_; ++j) {
        std::int64_t b = rhs.at(k, j);
        if (b == kNeg) continue;
        out.raise(i, j, a + b);
      }
    }
  return out;
}

std::vector<std::int64_t> MaxPlusMatrix::apply(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> y(static_cast<std::size_t>(dim_), kNeg);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      std::int64_t a = at(i, j);
      if (a == kNeg || x[static_cast<std::size_t>(j)] == kNeg) continue;
      y[static_cast<std::size_t>(i)] = std::max(y[static_cast<std::size_t>(i)], a + x[static_cast<std::size_t>(j)]);
    }
  return y;
}

std::vector<bool> unbounded_coordinates(const MaxPlusMatrix& m) {
  const int d = m.dim();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m.at(i, j) != MaxPlusMatrix::kNeg) adj[static_cast<std::size_t>(j)].push_back(i);
  auto comp = scc_ids(adj);
  std::vector<int> sources;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m.at(i, j) != MaxPlusMatrix::kNeg && m.at(i, j) > 0 &&
          comp[static_cast<std::size_t>(i)] == comp[static_cast<std::size_t>(j)])
        sources.push_back(j);
  return reachable_from(adj, sources);
}

bool MaxPlusMonitor::State::operator<(const State& o) const {
  return std::tie(started, inconsistent, order, tracer_level) <
         std::tie(o.started, o.inconsistent, o.order, o.tracer_level);
}

MaxPlusMonitor::MaxPlusMonitor(int num_registers) : n_(num_registers) {}

int MaxPlusMonitor::num_counters() const { return 1 + n_ + n_ * (1 + 2 * n_); }

MaxPlusMonitor::State MaxPlusMonitor::initial() const {
  State s;
  s.tracer_level.assign(static_cast<std::size_t>(n_), -1);
  return s;
}

std::pair<MaxPlusMonitor::State, MaxPlusMatrix> MaxPlusMonitor::step(const State& s0, const Constraint& c) const {
  const int n = n_;
  const int dim = num_counters();
  if (c.num_registers() != n) throw std::invalid_argument("monitor: register count mismatch");
  if (s0.inconsistent) return {s0, MaxPlusMatrix::identity(dim)};
  State s = s0;
  if (!s.started) {
    // Every start level of the first letter is tracked from the beginning.
    s.started = true;
    s.order = c.start();
    for (int k = 0; k < s.order.num_classes(); ++k) s.tracer_level[static_cast<std::size_t>(k)] = k;
  } else if (!(s.order == c.start())) {
    State bad = s;
    bad.inconsistent = true;
    return {bad, MaxPlusMatrix::identity(dim)};
  }

  MaxPlusMatrix m(dim);
  m.set(0, 0, 0);
  // Deepest decreasing one-way chain ending in each register.
  for (int r = 0; r < n; ++r) {
    m.set(decreasing_index(r), 0, 0);
    for (int x = 0; x < n; ++x) {
      int rel = c.cmp(x, n + r);
      if (rel > 0) m.raise(decreasing_index(r), decreasing_index(x), 1);
      else if (rel == 0) m.raise(decreasing_index(r), decreasing_index(x), 0);
    }
  }

  const Order end = c.end();
  const int start_classes = s.order.num_classes();
  std::vector<int> morph(static_cast<std::size_t>(start_classes), -1);
  std::vector<bool> fed(static_cast<std::size_t>(end.num_classes()), false);
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t)
      if (c.cmp(r, n + t) == 0) {
        morph[static_cast<std::size_t>(s.order.rank(r))] = end.rank(t);
        fed[static_cast<std::size_t>(end.rank(t))] = true;
      }

  std::vector<int> next_level(static_cast<std::size_t>(n), -1);
  auto reset_tracer = [&](int t) {
    for (int r = 0; r < n; ++r) {
      m.set(down_index(t, r), 0, 0);
      m.set(up_index(t, r), 0, 0);
    }
  };
  for (int t = 0; t < n; ++t) {
    const int level = s.tracer_level[static_cast<std::size_t>(t)];
    if (level < 0 || morph[static_cast<std::size_t>(level)] < 0) {
      // Idle or disappearing level: reset and count the idle step.
      m.set(idle_index(t), idle_index(t), 1);
      reset_tracer(t);
      continue;
    }
    m.set(idle_index(t), idle_index(t), 0);
    int top = -1;  // lowest-index register of the tracked level
    for (int r = 0; r < n && top < 0; ++r)
      if (s.order.rank(r) == level) top = r;
    for (int r = 0; r < n; ++r) {
      m.set(down_index(t, r), 0, 0);
      m.set(up_index(t, r), 0, 0);
      if (c.cmp(n + r, top) >= 0) continue;
      for (int o = 0; o < n; ++o) {
        if (c.cmp(o, top) >= 0) continue;
        int rel = c.cmp(o, n + r);
        if (rel > 0) m.raise(down_index(t, r), down_index(t, o), 1);
        if (rel < 0) m.raise(up_index(t, r), up_index(t, o), 1);
        if (rel == 0) {
          m.raise(down_index(t, r), down_index(t, o), 0);
          m.raise(up_index(t, r), up_index(t, o), 0);
        }
      }
    }
    next_level[static_cast<std::size_t>(t)] = morph[static_cast<std::size_t>(level)];
  }
  // New end levels get a free tracer; its counters were reset above.
  for (int k = 0; k < end.num_classes(); ++k) {
    if (fed[static_cast<std::size_t>(k)]) continue;
    for (int t = 0; t < n; ++t)
      if (next_level[static_cast<std::size_t>(t)] < 0) {
        next_level[static_cast<std::size_t>(t)] = k;
        break;
      }
  }
  State out;
  out.started = true;
  out.order = end;
  out.tracer_level = next_level;
  return {out, m};
}

MaxPlusMonitor::Verdict MaxPlusMonitor::evaluate(const LassoConstraintSeq& seq) const {
  if (seq.loop.empty()) throw std::invalid_argument("monitor: empty loop");
  const int dim = num_counters();
  State s = initial();
  std::vector<std::int64_t> x(static_cast<std::size_t>(dim), 0);
  for (const auto& c : seq.prefix) {
    auto [ns, mat] = step(s, c);
    x = mat.apply(x);
    s = ns;
  }
  std::map<std::pair<State, std::size_t>, std::size_t> seen;
  std::vector<MaxPlusMatrix> mats;
  std::vector<State> states;
  std::size_t j = 0;
  std::size_t cycle_start = 0;
  while (true) {
    auto key = std::make_pair(s, j % seq.loop.size());
    auto it = seen.find(key);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(key, j);
    states.push_back(s);
    auto [ns, mat] = step(s, seq.loop[j % seq.loop.size()]);
    mats.push_back(mat);
    s = ns;
    ++j;
  }
  Verdict v;
  v.distinct_states = seen.size();
  v.consistent = !s.inconsistent;
  MaxPlusMatrix cycle = MaxPlusMatrix::identity(dim);
  std::vector<MaxPlusMatrix> partial;  // cycle-relative prefixes
  for (std::size_t k = cycle_start; k < mats.size(); ++k) {
    partial.push_back(cycle);
    cycle = mats[k] * cycle;
  }
  auto unbounded = unbounded_coordinates(cycle);
  v.unbounded = unbounded;
  for (const auto& p : partial)
    for (int i = 0; i < dim; ++i)
      for (int jj = 0; jj < dim; ++jj)
        if (unbounded[static_cast<std::size_t>(jj)] && p.at(i, jj) != MaxPlusMatrix::kNeg)
          v.unbounded[static_cast<std::size_t>(i)] = true;
  v.decreasing_bounded = true;
  for (int r = 0; r < n_; ++r)
    if (v.unbounded[static_cast<std::size_t>(decreasing_index(r))]) v.decreasing_bounded = false;
  v.tracers_ok = true;
  for (int t = 0; t < n_; ++t) {
    if (v.unbounded[static_cast<std::size_t>(idle_index(t))]) continue;
    for (int r = 0; r < n_; ++r)
      if (v.unbounded[static_cast<std::size_t>(down_index(t, r))] || v.unbounded[static_cast<std::size_t>(up_index(t, r))])
        v.tracers_ok = false;
  }
  return v;
}

std::string MaxPlusMonitor::counter_name(int index) const {
  if (index == 0) return "const";
  if (index <= n_) return "dec[" + std::to_string(index - 1) + "]";
  int k = index - 1 - n_;
  int t = k / (1 + 2 * n_);
  int o = k % (1 + 2 * n_);
  if (o == 0) return "idle[" + std::to_string(t) + "]";
  if (o <= n_) return "down[" + std::to_string(t) + "][" + std::to_string(o - 1) + "]";
  return "up[" + std::to_string(t) + "][" + std::to_string(o - 1 - n_) + "]";
}

MaxPlusMonitor build_max_monitor(int num_registers) { return MaxPlusMonitor(num_registers); }

bool eval_monitor_on_lasso(const MaxPlusMonitor& m, const LassoConstraintSeq& seq) { return m.evaluate(seq).accepts(); }

}  // namespace rs
