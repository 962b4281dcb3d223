#include "support.hpp"

#include "regsynth/constraints/chains.hpp"
#include "regsynth/constraints/constr.hpp"
#include "regsynth/game/arena.hpp"
#include "regsynth/game/parity_game.hpp"
#include "regsynth/game/product.hpp"
#include "regsynth/game/solver.hpp"
#include "regsynth/synth/ido.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <queue>
#include <random>
#include <set>
#include <tuple>

using namespace rs;
using rs::testing::load_spec;

namespace {

ParityGame self_loop(int priority) {
  ParityGame g;
  g.add_vertex(Player::Eve, priority);
  g.succ[0].push_back(0);
  return g;
}

// Reachable arena vertices counted directly on the automaton.
std::pair<std::size_t, std::size_t> count_arena(const OneSidedSpec& spec) {
  std::set<std::pair<int, int>> adam{{-1, spec.initial}};
  std::set<std::tuple<std::uint32_t, std::uint32_t, int>> eve;
  std::queue<std::pair<int, int>> work;
  work.push({-1, spec.initial});
  while (!work.empty()) {
    auto [label, q] = work.front();
    work.pop();
    (void)label;
    const auto& row = spec.adam_delta[static_cast<std::size_t>(q)];
    for (std::uint32_t t = 0; t < row.size(); ++t) {
      if (!eve.insert({t, row[t].asgn.mask, row[t].target}).second) continue;
      const auto& out = spec.eve_delta[static_cast<std::size_t>(row[t].target)];
      for (int l = 0; l < static_cast<int>(out.size()); ++l)
        if (adam.insert({l, out[static_cast<std::size_t>(l)]}).second) work.push({l, out[static_cast<std::size_t>(l)]});
    }
  }
  return {adam.size(), eve.size()};
}

bool quasi_feasible(const LassoConstraintSeq& seq, Domain d) {
  return d == Domain::Nat ? is_zero_satisfiable_N(seq) : is_zero_satisfiable_Q(seq);
}

}  // namespace

TEST_CASE("arena of the up-we-go spec", "[game][arena]") {
  auto spec = load_spec("fig1.rsa");
  auto arena = build_arena(spec);
  auto [adam, eve] = count_arena(spec);
  CHECK(arena.num_adam() == adam);
  CHECK(arena.num_eve() == eve);
  CHECK(arena.num_vertices() == static_cast<int>(adam + eve));
  for (int v = 0; v < arena.num_vertices(); ++v) {
    const auto& vx = arena.vertices[static_cast<std::size_t>(v)];
    CHECK(arena.succ[static_cast<std::size_t>(v)].size() == (vx.adam ? 9U : 2U));
  }
}

TEST_CASE("arena of a one-state loop", "[game][arena]") {
  auto spec = parse_spec(
      "kind one-sided\nregisters r\nlabels l\nstate s adam priority 1 initial\nstate t eve priority 2\n"
      "on s guard \"TOP\" -> t\non t label l -> s\n");
  auto arena = build_arena(spec);
  CHECK(arena.num_adam() == 2);
  CHECK(arena.num_eve() == 3);
  CHECK(arena.num_edges() == 2 * 3 + 3);
}

TEST_CASE("solver on trivial games", "[game][solver]") {
  auto even = solve_parity(self_loop(2));
  CHECK(even.eve_wins(0));
  auto odd = solve_parity(self_loop(1));
  CHECK_FALSE(odd.eve_wins(0));
  CHECK(brute_force_solve(self_loop(4))[0] == Player::Eve);
  CHECK(brute_force_solve(self_loop(3))[0] == Player::Adam);
}

TEST_CASE("a strategy into the opponent's region is rejected", "[game][solver]") {
  ParityGame g;
  g.add_vertex(Player::Eve, 1);  // choice
  g.add_vertex(Player::Eve, 2);  // good loop
  g.add_vertex(Player::Eve, 1);  // bad loop
  g.succ[0] = {1, 2};
  g.succ[1] = {1};
  g.succ[2] = {2};
  g.validate();
  auto sol = solve_parity(g);
  CHECK(sol.eve_wins(0));
  CHECK(sol.strategy[0] == 1);
  auto region = region_of(sol, Player::Eve);
  CHECK(verify_strategy(g, sol.strategy, Player::Eve, region));
  auto bad = sol.strategy;
  bad[0] = 2;
  CHECK_FALSE(verify_strategy(g, bad, Player::Eve, region));
}

TEST_CASE("Zielonka matches exhaustive strategy enumeration", "[game][solver][property]") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    auto g = random_parity_game(1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 4), 3, rng);
    auto sol = solve_parity(g);
    REQUIRE(sol.winner == brute_force_solve(g));
    CHECK(verify_strategy(g, sol.strategy, Player::Eve, region_of(sol, Player::Eve)));
    CHECK(verify_strategy(g, sol.strategy, Player::Adam, region_of(sol, Player::Adam)));
  }
}

TEST_CASE("shifting all priorities by two keeps the winner", "[game][solver][property]") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 200; ++it) {
    auto g = random_parity_game(1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 5), 3, rng);
    auto shifted = g;
    for (auto& p : shifted.priority) p += 2;
    auto compressed = g;
    compress_priorities(compressed);
    const auto base = solve_parity(g).winner;
    CHECK(solve_parity(shifted).winner == base);
    CHECK(solve_parity(compressed).winner == base);
    CHECK(compressed.max_priority() <= g.max_priority());
  }
}

TEST_CASE("feasibility game winners", "[game][product]") {
  auto fig1 = load_spec("fig1.rsa");
  auto nat = build_parity_game(fig1, Domain::Nat);
  CHECK(solve_parity(nat.game).eve_wins(nat.game.initial));
  auto rat = build_parity_game(fig1, Domain::Rat);
  CHECK_FALSE(solve_parity(rat.game).eve_wins(rat.game.initial));
  for (Domain d : {Domain::Nat, Domain::Rat}) {
    auto even = build_parity_game(load_spec("trivially_even.rsa"), d);
    CHECK(solve_parity(even.game).eve_wins(even.game.initial));
  }
  CHECK_THROWS_AS(build_parity_game(fig1, Domain::Nat, 10), std::length_error);
}

// Plays a random positional profile in the product until a vertex repeats and compares the
// product's verdict with a direct evaluation of the induced action lasso.
TEST_CASE("product plays agree with the induced constraint lassos", "[game][product][property]") {
  std::mt19937_64 rng(33);
  for (const char* name : {"fig1.rsa", "ido_interval.rsa", "nested_interval.rsa"}) {
    OneSidedSpec spec = std::string(name) == "ido_interval.rsa"
                            ? reduce_ido_to_one_sided(parse_ido_spec(rs::testing::read_text(rs::testing::specs_path(name))))
                            : load_spec(name);
    for (Domain d : {Domain::Nat, Domain::Rat}) {
      auto pg = build_parity_game(spec, d);
      const auto& g = pg.game;
      for (int round = 0; round < 60; ++round) {
        std::map<int, int> choice;
        std::vector<int> path;
        std::map<int, std::size_t> seen;
        std::vector<ActionLetter> letters;
        std::vector<int> spec_states;
        int v = g.initial;
        while (!seen.count(v)) {
          seen[v] = path.size();
          path.push_back(v);
          if (v == pg.sink) break;
          const int q = pg.spec_state(v);
          if (!choice.count(v)) choice[v] = static_cast<int>(rng() % 64);
          if (g.owner[static_cast<std::size_t>(v)] == Player::Adam) {
            const auto code = static_cast<std::uint32_t>(choice[v]) % num_tests(spec.registers.size());
            letters.push_back({Test::decode(code, spec.registers.size()),
                               spec.adam_delta[static_cast<std::size_t>(q)][code].asgn});
            spec_states.push_back(q);
            v = pg.adam_successor(v, code);
          } else {
            const int label = choice[v] % static_cast<int>(spec.labels.size());
            spec_states.push_back(q);
            v = pg.eve_successor(v, label);
          }
        }
        const bool at_sink = path.back() == pg.sink;
        // Game verdict.
        bool game_eve;
        if (at_sink) {
          game_eve = g.priority[static_cast<std::size_t>(pg.sink)] % 2 == 0;
        } else {
          int best = 0;
          for (std::size_t i = seen[v]; i < path.size(); ++i)
            best = std::max(best, g.priority[static_cast<std::size_t>(path[i])]);
          game_eve = best % 2 == 0;
        }
        // Direct verdict: infeasible constraint words or an even spec parity win for Eve.
        bool direct_eve;
        ActionLasso w;
        w.num_registers = spec.registers.size();
        if (at_sink) {
          w.prefix = letters;
          w.loop.push_back(letters.back());
          auto induced = induced_lasso(w, spec.registers);
          REQUIRE(induced.inconsistent_at.has_value());
          direct_eve = true;
        } else {
          // Adam letters before the cycle start form the prefix.
          std::size_t adam_before = 0;
          for (std::size_t i = 0; i < seen[v]; ++i)
            if (g.owner[static_cast<std::size_t>(path[i])] == Player::Adam) ++adam_before;
          w.prefix.assign(letters.begin(), letters.begin() + static_cast<long>(adam_before));
          w.loop.assign(letters.begin() + static_cast<long>(adam_before), letters.end());
          int spec_best = 0;
          for (std::size_t i = seen[v]; i < spec_states.size(); ++i)
            spec_best = std::max(spec_best, spec.states[static_cast<std::size_t>(spec_states[i])].priority);
          auto induced = induced_lasso(w, spec.registers);
          const bool feasible = !induced.inconsistent_at && quasi_feasible(induced.seq, d);
          direct_eve = !feasible || spec_best % 2 == 0;
        }
        REQUIRE(game_eve == direct_eve);
      }
    }
  }
}

TEST_CASE("solve report and dot export", "[game][product]") {
  auto pg = build_parity_game(load_spec("trivially_even.rsa"), Domain::Nat);
  auto sol = solve_parity(pg.game);
  auto report = solve_report(pg.game, sol);
  CHECK_FALSE(report.empty());
  CHECK(export_dot(pg.game).find("digraph") != std::string::npos);
}
