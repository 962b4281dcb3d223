#include "regsynth/game/arena.hpp"

#include <queue>

namespace rs {

std::size_t Arena::num_adam() const {
  std::size_t k = 0;
  for (const auto& v : vertices) k += v.adam ? 1 : 0;
  return k;
}

std::size_t Arena::num_eve() const { return vertices.size() - num_adam(); }

std::size_t Arena::num_edges() const {
  std::size_t k = 0;
  for (const auto& s : succ) k += s.size();
  return k;
}

std::string Arena::vertex_name(const OneSidedSpec& spec, int v) const {
  const auto& x = vertices[static_cast<std::size_t>(v)];
  const std::string& q = spec.states[static_cast<std::size_t>(x.spec_state)].name;
  if (x.adam) {
    if (x.label < 0) return q;
    return "(" + spec.labels[static_cast<std::size_t>(x.label)] + "," + q + ")";
  }
  return "(" + format_test(Test::decode(x.test, spec.registers.size()), spec.registers) + "," +
         format_assignment(x.asgn, spec.registers) + "," + q + ")";
}

Arena build_arena(const OneSidedSpec& spec) {
  spec.validate();
  Arena arena;
  // Keys: Adam (label, state) with label -1 for the initial vertex; Eve (test, asgn, state).
  std::map<std::tuple<int, int>, int> adam_ids;
  std::map<std::tuple<std::uint32_t, std::uint32_t, int>, int> eve_ids;
  std::queue<int> work;
  auto adam_vertex = [&](int label, int q) {
    auto key = std::make_tuple(label, q);
    auto it = adam_ids.find(key);
    if (it != adam_ids.end()) return it->second;
    int id = arena.num_vertices();
    ArenaVertex v;
    v.adam = true;
    v.spec_state = q;
    v.label = label;
    arena.vertices.push_back(v);
    arena.succ.emplace_back();
    adam_ids.emplace(key, id);
    work.push(id);
    return id;
  };
  auto eve_vertex = [&](std::uint32_t test, Assignment a, int q) {
    auto key = std::make_tuple(test, a.mask, q);
    auto it = eve_ids.find(key);
    if (it != eve_ids.end()) return it->second;
    int id = arena.num_vertices();
    ArenaVertex v;
    v.adam = false;
    v.spec_state = q;
    v.test = test;
    v.asgn = a;
    arena.vertices.push_back(v);
    arena.succ.emplace_back();
    eve_ids.emplace(key, id);
    work.push(id);
    return id;
  };
  arena.initial = adam_vertex(-1, spec.initial);
  const std::uint32_t tests = num_tests(spec.registers.size());
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    const ArenaVertex x = arena.vertices[static_cast<std::size_t>(v)];
    std::vector<int> out;
    if (x.adam) {
      const auto& row = spec.adam_delta[static_cast<std::size_t>(x.spec_state)];
      for (std::uint32_t t = 0; t < tests; ++t) out.push_back(eve_vertex(t, row[t].asgn, row[t].target));
    } else {
      const auto& row = spec.eve_delta[static_cast<std::size_t>(x.spec_state)];
      for (std::size_t l = 0; l < row.size(); ++l) out.push_back(adam_vertex(static_cast<int>(l), row[l]));
    }
    arena.succ[static_cast<std::size_t>(v)] = out;
  }
  return arena;
}

}  // namespace rs
