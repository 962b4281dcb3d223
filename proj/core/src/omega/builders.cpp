#include "regsynth/omega/builders.hpp"

#include <stdexcept>

namespace rs {

namespace {

constexpr std::int64_t kFreshTag = -1;
constexpr std::int64_t kSinkTag = -2;

LazyDpa::Key order_key(const Order& o) {
  LazyDpa::Key k;
  for (auto r : o.ranks()) k.push_back(r);
  return k;
}

}  // namespace

ConsistencyDpa::ConsistencyDpa(int num_registers, bool require_zero_start)
    : LazyDpa(num_registers), zero_start_(require_zero_start) {
  set_initial({kFreshTag});
}

std::pair<LazyDpa::Key, int> ConsistencyDpa::compute(const Key& from, const Constraint& letter) const {
  if (from == Key{kSinkTag}) return {from, 1};
  if (from == Key{kFreshTag}) {
    if (zero_start_ && !letter.start().all_equal()) return {Key{kSinkTag}, 1};
    return {order_key(letter.end()), 2};
  }
  if (order_key(letter.start()) != from) return {Key{kSinkTag}, 1};
  return {order_key(letter.end()), 2};
}

std::string ConsistencyDpa::state_label(int state) const {
  Key k = key(state);
  if (k == Key{kFreshTag}) return "fresh";
  if (k == Key{kSinkTag}) return "sink";
  std::string s = "ranks";
  for (auto r : k) s += " " + std::to_string(r);
  return s;
}

DpaPtr build_consistency_dpa(int num_registers, bool require_zero_start) {
  return std::make_shared<ConsistencyDpa>(num_registers, require_zero_start);
}

Nba build_inconsistency_nba(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int atoms = 3 * static_cast<int>(pairs.size());
  Nba m;
  m.num_registers = n;
  m.num_states = atoms + 2;
  const int wait = 0, sink = atoms + 1;
  m.initial = state_bit(wait);
  m.accepting = state_bit(sink);
  m.state_names.push_back("wait");
  for (auto [a, b] : pairs)
    for (const char* rel : {"<", "=", ">"})
      m.state_names.push_back("r" + std::to_string(a) + "'" + rel + "r" + std::to_string(b) + "'");
  m.state_names.push_back("broken");
  m.successors = [n, pairs, wait, sink](int q, const Constraint& c) -> Nba::StateSet {
    if (q == sink) return state_bit(sink);
    if (q == wait) {
      Nba::StateSet out = state_bit(wait);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        int rel = c.cmp(n + pairs[i].first, n + pairs[i].second) + 1;
        out |= state_bit(1 + 3 * static_cast<int>(i) + rel);
      }
      return out;
    }
    int i = (q - 1) / 3, rel = (q - 1) % 3 - 1;
    const auto [a, b] = pairs[static_cast<std::size_t>(i)];
    return c.cmp(a, b) != rel ? state_bit(sink) : 0;
  };
  return m;
}

Nba build_decreasing_chain_nba(int n) {
  Nba m;
  m.num_registers = n;
  m.num_states = 1 + 2 * n;
  auto track = [n](int x, bool strict) { return 1 + (strict ? n : 0) + x; };
  m.initial = state_bit(0);
  for (int x = 0; x < n; ++x) m.accepting |= state_bit(track(x, true));
  m.state_names.push_back("wait");
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < n; ++x) m.state_names.push_back((s ? "dec>" : "dec=") + std::to_string(x));
  m.successors = [n, track](int q, const Constraint& c) -> Nba::StateSet {
    Nba::StateSet out = 0;
    if (q == 0) {
      out = state_bit(0);
      for (int x = 0; x < n; ++x) out |= state_bit(track(x, false));
      return out;
    }
    int r = (q - 1) % n;
    for (int x = 0; x < n; ++x) {
      int rel = c.cmp(r, n + x);
      if (rel >= 0) out |= state_bit(track(x, rel > 0));
    }
    return out;
  };
  return m;
}

Nba build_trespassing_chain_nba(int n) {
  // States: wait, then (stable s, climbing r, strict flag) for s != r.
  std::vector<std::pair<int, int>> combos;
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r)
      if (s != r) combos.emplace_back(s, r);
  std::vector<int> index(static_cast<std::size_t>(n * n), -1);
  for (std::size_t i = 0; i < combos.size(); ++i)
    index[static_cast<std::size_t>(combos[i].first * n + combos[i].second)] = static_cast<int>(i);
  Nba m;
  m.num_registers = n;
  m.num_states = 1 + 2 * static_cast<int>(combos.size());
  auto state = [index, n](int s, int r, bool strict) {
    return 1 + 2 * index[static_cast<std::size_t>(s * n + r)] + (strict ? 1 : 0);
  };
  m.initial = state_bit(0);
  m.state_names.push_back("wait");
  for (auto [s, r] : combos) {
    m.accepting |= state_bit(state(s, r, true));
    m.state_names.push_back("stable" + std::to_string(s) + ">up" + std::to_string(r) + "=");
    m.state_names.push_back("stable" + std::to_string(s) + ">up" + std::to_string(r) + "<");
  }
  m.successors = [n, combos, state](int q, const Constraint& c) -> Nba::StateSet {
    Nba::StateSet out = 0;
    if (q == 0) {
      out = state_bit(0);
      for (auto [s, r] : combos) out |= state_bit(state(s, r, false));
      return out;
    }
    auto [s, r] = combos[static_cast<std::size_t>((q - 1) / 2)];
    if (c.cmp(r, s) >= 0) return 0;
    for (int s2 = 0; s2 < n; ++s2) {
      if (c.cmp(s, n + s2) != 0) continue;
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == s2) continue;
        int rel = c.cmp(r, n + r2);
        if (rel <= 0) out |= state_bit(state(s2, r2, rel < 0));
      }
    }
    return out;
  };
  return m;
}

Nba build_zero_start_violation_nba(int n) {
  Nba m;
  m.num_registers = n;
  m.num_states = n + 2;
  const int init = 0, sink = n + 1;
  m.initial = state_bit(init);
  m.accepting = state_bit(sink);
  m.state_names.push_back("start");
  for (int x = 0; x < n; ++x) m.state_names.push_back("zero" + std::to_string(x));
  m.state_names.push_back("violated");
  m.successors = [n, init, sink](int q, const Constraint& c) -> Nba::StateSet {
    if (q == sink) return state_bit(sink);
    if (q == init && !c.start().all_equal()) return state_bit(sink);
    int from = q == init ? 0 : q - 1;
    Nba::StateSet out = 0;
    for (int y = 0; y < n; ++y) {
      int rel = c.cmp(from, n + y);
      if (rel > 0) out |= state_bit(sink);
      else if (rel == 0) out |= state_bit(1 + y);
    }
    return out;
  };
  return m;
}

std::vector<Nba> build_bad_chain_nbas(int n) {
  return {build_decreasing_chain_nba(n), build_trespassing_chain_nba(n), build_zero_start_violation_nba(n)};
}

DpaPtr build_infeasibility_dpa(int n, bool include_consistency) {
  auto parts = build_bad_chain_nbas(n);
  if (include_consistency) parts.insert(parts.begin(), build_inconsistency_nba(n));
  return determinize(nba_union(parts));
}

DpaPtr build_quasi_feasible_dpa(int n, bool include_consistency) {
  return complement_dpa(build_infeasibility_dpa(n, include_consistency));
}

}  // namespace rs
