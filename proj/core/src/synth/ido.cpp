#include "regsynth/synth/ido.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace rs {

namespace {

// Partition as the lowest-index member of each register's class.
using Partition = std::vector<int>;

Partition canonical(std::vector<int> parent) {
  const int n = static_cast<int>(parent.size());
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  Partition out(static_cast<std::size_t>(n));
  std::map<int, int> least;
  for (int r = 0; r < n; ++r) least.emplace(find(r), r);
  for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = least.at(find(r));
  return out;
}

Partition step_partition(const Partition& p, const Test& t, const Assignment& a) {
  const int n = static_cast<int>(p.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const bool ax = a.contains(x), ay = a.contains(y);
      bool equal = false;
      if (ax && ay) equal = true;
      else if (ax) equal = t.rel[static_cast<std::size_t>(y)] == Rel::Equal;
      else if (ay) equal = t.rel[static_cast<std::size_t>(x)] == Rel::Equal;
      else equal = p[static_cast<std::size_t>(x)] == p[static_cast<std::size_t>(y)];
      if (equal) unite(x, y);
    }
  return canonical(parent);
}

std::string partition_name(const Partition& p, const RegisterSet& regs) {
  std::string out;
  for (int r = 0; r < regs.size(); ++r) {
    if (p[static_cast<std::size_t>(r)] != r) continue;
    out += '{';
    bool first = true;
    for (int s = 0; s < regs.size(); ++s)
      if (p[static_cast<std::size_t>(s)] == r) {
        if (!first) out += ',';
        out += regs.name(s);
        first = false;
      }
    out += '}';
  }
  return out;
}

}  // namespace

OneSidedSpec reduce_ido_to_one_sided(const IdoSpec& spec) {
  spec.validate();
  const int n = spec.registers.size();
  OneSidedSpec out;
  out.registers = spec.registers;
  out.labels = spec.registers.names();
  std::map<std::pair<int, Partition>, int> index;
  std::deque<std::pair<int, Partition>> work;
  auto state_of = [&](int q, const Partition& p) {
    auto key = std::make_pair(q, p);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = out.num_states();
    index.emplace(key, id);
    SpecState s = spec.states[static_cast<std::size_t>(q)];
    s.name += partition_name(p, spec.registers);
    out.states.push_back(s);
    out.adam_delta.emplace_back();
    out.eve_delta.emplace_back();
    work.push_back(key);
    return id;
  };
  out.initial = state_of(spec.initial, Partition(static_cast<std::size_t>(n), 0));
  while (!work.empty()) {
    auto [q, p] = work.front();
    work.pop_front();
    const int id = index.at({q, p});
    if (spec.states[static_cast<std::size_t>(q)].owner == Player::Adam) {
      std::vector<AdamMove> row;
      for (std::uint32_t code = 0; code < num_tests(n); ++code) {
        const AdamMove& mv = spec.adam_delta[static_cast<std::size_t>(q)][code];
        Test t = Test::decode(code, n);
        row.push_back(AdamMove{mv.asgn, state_of(mv.target, step_partition(p, t, mv.asgn))});
      }
      out.adam_delta[static_cast<std::size_t>(id)] = std::move(row);
    } else {
      std::vector<int> row;
      for (int r = 0; r < n; ++r) {
        const int target = spec.output_delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(p[static_cast<std::size_t>(r)])];
        row.push_back(state_of(target, p));
      }
      out.eve_delta[static_cast<std::size_t>(id)] = std::move(row);
    }
  }
  out.validate();
  return out;
}

}  // namespace rs
