#include "regsynth/synth/eve.hpp"

#include <deque>
#include <map>

namespace rs {

RegisterTransducer extract_eve_transducer(const OneSidedSpec& spec, const ProductGame& game,
                                          const ParitySolution& solution) {
  const int start = game.game.initial;
  if (!solution.eve_wins(start)) throw NotRealizable("Adam wins from the initial vertex");
  RegisterTransducer t;
  t.registers = spec.registers;
  t.labels = spec.labels;
  const std::uint32_t tests = num_tests(spec.registers.size());
  std::map<int, int> index;  // product vertex -> transducer state
  std::deque<int> work;
  auto state_of = [&](int v) {
    auto [it, fresh] = index.emplace(v, static_cast<int>(index.size()));
    if (fresh) {
      work.push_back(v);
      const auto& ref = game.refs[static_cast<std::size_t>(v)];
      t.state_names.push_back(game.arena.vertex_name(spec, ref.arena_vertex) + "#" + std::to_string(v));
      t.step.emplace_back();
    }
    return it->second;
  };
  t.initial = state_of(start);
  while (!work.empty()) {
    const int v = work.front();
    work.pop_front();
    const int s = index.at(v);
    std::vector<TransducerMove> row(tests);
    for (std::uint32_t code = 0; code < tests; ++code) {
      TransducerMove mv;
      const int e = game.adam_successor(v, code);
      if (game.refs[static_cast<std::size_t>(e)].sink) {
        mv.live = false;
        mv.target = s;
        row[code] = mv;
        continue;
      }
      if (!solution.eve_wins(e)) throw std::logic_error("transducer: Adam escapes the winning region");
      mv.asgn = game.arena.vertices[static_cast<std::size_t>(game.refs[static_cast<std::size_t>(e)].arena_vertex)].asgn;
      const int w = solution.strategy[static_cast<std::size_t>(e)];
      mv.label = -1;
      for (int l = 0; l < static_cast<int>(spec.labels.size()); ++l)
        if (game.eve_successor(e, l) == w) {
          mv.label = l;
          break;
        }
      if (mv.label < 0) throw std::logic_error("transducer: strategy edge has no label");
      mv.target = state_of(w);
      row[code] = mv;
    }
    t.step[static_cast<std::size_t>(s)] = std::move(row);
  }
  t.validate();
  return t;
}

}  // namespace rs
