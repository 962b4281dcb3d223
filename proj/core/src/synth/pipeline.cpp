#include "regsynth/synth/pipeline.hpp"

#include "regsynth/game/solver.hpp"
#include "regsynth/synth/eve.hpp"
#include "regsynth/synth/ido.hpp"

#include <chrono>
#include <sstream>

namespace rs {

AdamDataStrategy SynthesisResult::adam_strategy(DataAssigner::Insertion mode) const {
  if (realizable) throw std::logic_error("no Adam strategy: the input is realizable");
  return AdamDataStrategy(game, solution, adam_bound, mode);
}

std::string SynthesisResult::summary() const {
  std::ostringstream out;
  out << "domain: " << domain_name(domain) << '\n'
      << "verdict: " << (realizable ? "realizable" : "unrealizable") << '\n'
      << "arena vertices: " << game->arena.num_vertices() << '\n'
      << "game vertices: " << game->game.num_vertices() << '\n'
      << "game edges: " << game->game.num_edges() << '\n'
      << "max priority: " << game->game.max_priority() << '\n'
      << "eve region: " << solution->region_size(Player::Eve) << '\n';
  if (transducer) out << "transducer states: " << transducer->num_states() << '\n';
  else out << "adam depth bound: " << adam_bound << '\n';
  out << "build seconds: " << build_seconds << '\n' << "solve seconds: " << solve_seconds << '\n';
  return out.str();
}

SynthesisResult synthesize(const OneSidedSpec& spec, Domain domain, std::size_t max_vertices) {
  using Clock = std::chrono::steady_clock;
  SynthesisResult res;
  res.domain = domain;
  res.spec = spec;
  auto t0 = Clock::now();
  auto game = std::make_shared<ProductGame>(build_parity_game(spec, domain, max_vertices));
  auto t1 = Clock::now();
  auto solution = std::make_shared<ParitySolution>(solve_parity(game->game));
  auto t2 = Clock::now();
  res.build_seconds = std::chrono::duration<double>(t1 - t0).count();
  res.solve_seconds = std::chrono::duration<double>(t2 - t1).count();
  res.game = game;
  res.solution = solution;
  res.realizable = solution->eve_wins(game->game.initial);
  if (res.realizable) res.transducer = extract_eve_transducer(spec, *game, *solution);
  else res.adam_bound = estimate_adam_bound(*game, *solution);
  return res;
}

SynthesisResult synthesize(const IdoSpec& spec, Domain domain, std::size_t max_vertices) {
  return synthesize(reduce_ido_to_one_sided(spec), domain, max_vertices);
}

}  // namespace rs
