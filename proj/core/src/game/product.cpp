#include "regsynth/game/product.hpp"

#include "regsynth/constraints/constr.hpp"
#include "regsynth/omega/builders.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace rs {

int ProductGame::adam_successor(int v, std::uint32_t test) const {
  const auto& r = refs[static_cast<std::size_t>(v)];
  if (r.sink) return v;
  return game.succ[static_cast<std::size_t>(v)][test];
}

int ProductGame::eve_successor(int v, int label) const {
  const auto& r = refs[static_cast<std::size_t>(v)];
  if (r.sink) return v;
  return game.succ[static_cast<std::size_t>(v)][static_cast<std::size_t>(label)];
}

int ProductGame::spec_state(int v) const {
  const auto& r = refs[static_cast<std::size_t>(v)];
  return r.sink ? -1 : arena.vertices[static_cast<std::size_t>(r.arena_vertex)].spec_state;
}

ProductGame build_parity_game(const OneSidedSpec& spec, Domain domain, std::size_t max_vertices) {
  ProductGame pg;
  pg.domain = domain;
  pg.arena = build_arena(spec);
  const int n = spec.registers.size() + 1;  // R plus r_d
  if (domain == Domain::Nat) pg.infeasible = build_infeasibility_dpa(n, false);
  else pg.infeasible = complement_dpa(build_consistency_dpa(n, true));
  int amin = INT32_MAX, amax = 0;
  for (const auto& s : spec.states) {
    amin = std::min(amin, s.priority);
    amax = std::max(amax, s.priority);
  }
  pg.iar = std::make_shared<IarCombiner>(pg.infeasible->min_priority(), pg.infeasible->max_priority(), amin, amax);
  const int neutral = pg.infeasible->min_priority();

  using Key = std::tuple<int, Order, int, int, int>;  // arena vertex, pi, dpa state, record, arrival priority
  std::map<Key, int> ids;
  std::queue<int> work;
  ParityGame& g = pg.game;
  auto vertex = [&](int av, const Order& pi, int q, int rec, int prio) {
    Key key{av, pi, q, rec, prio};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (static_cast<std::size_t>(g.num_vertices()) >= max_vertices)
      throw std::length_error("product game exceeds " + std::to_string(max_vertices) + " vertices");
    const auto& ax = pg.arena.vertices[static_cast<std::size_t>(av)];
    int id = g.add_vertex(ax.adam ? Player::Adam : Player::Eve, prio, pg.arena.vertex_name(spec, av));
    pg.refs.push_back(ProductRef{av, pi, q, rec, false});
    ids.emplace(key, id);
    work.push(id);
    return id;
  };
  auto sink = [&]() {
    if (pg.sink < 0) {
      pg.sink = g.add_vertex(Player::Eve, 2, "inconsistent");
      g.succ[static_cast<std::size_t>(pg.sink)] = {pg.sink};
      pg.refs.push_back(ProductRef{-1, Order{}, 0, 0, true});
    }
    return pg.sink;
  };
  g.initial = vertex(pg.arena.initial, Order::all_equal(n), pg.infeasible->initial(), pg.iar->initial(), 1);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    const ProductRef ref = pg.refs[static_cast<std::size_t>(v)];
    const auto& ax = pg.arena.vertices[static_cast<std::size_t>(ref.arena_vertex)];
    const auto& out = pg.arena.succ[static_cast<std::size_t>(ref.arena_vertex)];
    std::vector<int> succ;
    succ.reserve(out.size());
    if (ax.adam) {
      for (std::size_t t = 0; t < out.size(); ++t) {
        const auto& ex = pg.arena.vertices[static_cast<std::size_t>(out[t])];
        auto c = constr(ref.pi, Test::decode(static_cast<std::uint32_t>(t), spec.registers.size()), ex.asgn);
        if (!c) {
          succ.push_back(sink());
          continue;
        }
        DpaEdge e = pg.infeasible->step(ref.dpa_state, *c);
        int alpha = spec.states[static_cast<std::size_t>(ex.spec_state)].priority;
        auto [rec, prio] = pg.iar->step(ref.iar_record, e.priority, alpha);
        succ.push_back(vertex(out[t], c->end(), e.target, rec, prio));
      }
    } else {
      for (int w : out) {
        const auto& nx = pg.arena.vertices[static_cast<std::size_t>(w)];
        int alpha = spec.states[static_cast<std::size_t>(nx.spec_state)].priority;
        auto [rec, prio] = pg.iar->step(ref.iar_record, neutral, alpha);
        succ.push_back(vertex(w, ref.pi, ref.dpa_state, rec, prio));
      }
    }
    g.succ[static_cast<std::size_t>(v)] = succ;
  }
  compress_priorities(g);
  g.validate();
  return pg;
}

}  // namespace rs
