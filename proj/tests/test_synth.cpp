#include "support.hpp"

#include "regsynth/constraints/constr.hpp"
#include "regsynth/constraints/prefix.hpp"
#include "regsynth/constraints/random.hpp"
#include "regsynth/constraints/zero.hpp"
#include "regsynth/game/solver.hpp"
#include "regsynth/synth/adam.hpp"
#include "regsynth/synth/assign.hpp"
#include "regsynth/synth/eve.hpp"
#include "regsynth/synth/ido.hpp"
#include "regsynth/synth/pipeline.hpp"
#include "regsynth/synth/simulate.hpp"

#include <catch_amalgamated.hpp>

#include <queue>
#include <set>

using namespace rs;
using rs::testing::load_spec;
using rs::testing::read_text;
using rs::testing::specs_path;

namespace {

IdoSpec load_ido(const std::string& name) { return parse_ido_spec(read_text(specs_path(name))); }

// Random constraint words built by constr from random consistent tests, lifted with a
// zero register; stops early when the word stops being meaningful.
std::vector<Constraint> random_lifted_word(int n, std::size_t length, Rng& rng) {
  auto pi = Order::all_equal(n + 1);
  ZeroLifter lifter(n + 1);
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < length; ++i) {
    std::optional<Constraint> c;
    while (!c) {
      auto t = Test::decode(static_cast<std::uint32_t>(rng() % num_tests(n)), n);
      Assignment a;
      a.mask = static_cast<std::uint32_t>(rng() % (1U << n));
      c = constr(pi, t, a);
    }
    try {
      out.push_back(lifter.lift(*c));
    } catch (const std::invalid_argument&) {
      break;
    }
    pi = c->end();
  }
  return out;
}

// Vertices reachable when Adam follows his strategy and Eve moves freely.
std::size_t restricted_size(const ProductGame& g, const ParitySolution& s) {
  std::vector<bool> seen(static_cast<std::size_t>(g.game.num_vertices()), false);
  std::queue<int> work;
  work.push(g.game.initial);
  seen[static_cast<std::size_t>(g.game.initial)] = true;
  std::size_t count = 0;
  while (!work.empty()) {
    const int v = work.front();
    work.pop();
    ++count;
    std::vector<int> next;
    if (g.game.owner[static_cast<std::size_t>(v)] == Player::Adam) next.push_back(s.strategy[static_cast<std::size_t>(v)]);
    else next = g.game.succ[static_cast<std::size_t>(v)];
    for (int w : next)
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        work.push(w);
      }
  }
  return count;
}

}  // namespace

TEST_CASE("data assignment examples", "[synth][assign]") {
  RegisterSet regs({"rM", "rl", "rd", "z"});
  DataAssigner assigner(4, 3, 3);
  // rM and the datum jump to a fresh top level.
  auto top = assigner.advance(parse_constraint("{rM,rl,rd,z,rl',z'} < {rM',rd'}", regs));
  CHECK(top[0] == 8);
  CHECK(top[1] == 0);
  // A datum strictly between rl = 0 and rM = 8 lands on the midpoint.
  auto mid = assigner.advance(parse_constraint("{rl,z,rl',z'} < {rd'} < {rM,rd,rM'}", regs));
  CHECK(mid[2] == 4);
  CHECK(mid[0] == 8);
  // An equality test copies the existing value.
  auto copy = assigner.advance(parse_constraint("{rl,z,rl',z'} < {rd,rd'} < {rM,rM'}", regs));
  CHECK(copy[2] == 4);
  CHECK(assigner.valuations().size() == 4);
  CHECK(verify_assignment_invariant(assigner.history(), assigner.valuations(), 3).ok());

  RegisterSet dz({"rd", "z"});
  DataAssigner fresh(2, 1, 3);
  CHECK(fresh.next(parse_constraint("{rd,z,z'} < {rd'}", dz))[0] == 8);
  CHECK_THROWS_AS(fresh.next(parse_constraint("{rd'} < {rd,z,z'}", dz)), std::invalid_argument);
}

TEST_CASE("an all-equal prefix satisfies the invariant trivially", "[synth][assign]") {
  RegisterSet regs({"a", "z"});
  std::vector<Constraint> flat(5, parse_constraint("{a,z,a',z'}", regs));
  DataAssigner assigner(2, 1, 2);
  for (const auto& c : flat) assigner.advance(c);
  auto report = verify_assignment_invariant(flat, assigner.valuations(), 2);
  CHECK(report.ok());
  CHECK(report.checked_pairs == 0);
}

TEST_CASE("the spacing invariant holds on random lifted words", "[synth][assign][property]") {
  Rng rng(41);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 2);
    auto word = random_lifted_word(n, 1 + rng() % 8, rng);
    if (word.empty()) continue;
    const unsigned bound = static_cast<unsigned>(std::max(1, max_r2w_depth(word)));
    DataAssigner assigner(n + 2, n + 1, bound);
    for (const auto& c : word) assigner.advance(c);
    auto report = verify_assignment_invariant(word, assigner.valuations(), bound);
    REQUIRE(report.ok());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("the tightness adversary defeats only the sabotaged assigner", "[synth][assign]") {
  for (unsigned b = 3; b <= 5; ++b) {
    auto honest = run_tightness_adversary(DataAssigner(3, 2, b), 40);
    CHECK_FALSE(honest.defeated_at.has_value());
    CHECK(honest.max_depth <= static_cast<int>(b));
    auto sabotaged = run_tightness_adversary(DataAssigner(3, 2, b, DataAssigner::Insertion::JustAbove), 40);
    REQUIRE(sabotaged.defeated_at.has_value());
    CHECK(*sabotaged.defeated_at < b);
  }
}

TEST_CASE("Adam's bound follows the restricted graph", "[synth][adam]") {
  auto result = synthesize(load_spec("fig1.rsa"), Domain::Rat);
  REQUIRE_FALSE(result.realizable);
  const auto size = restricted_size(*result.game, *result.solution);
  const unsigned expected = static_cast<unsigned>(size) * static_cast<unsigned>(result.spec.registers.size() + 2) + 1;
  CHECK(result.adam_bound == expected);
  CHECK(estimate_adam_bound(*result.game, *result.solution) == expected);
}

TEST_CASE("up-we-go over the naturals yields a transducer", "[synth][eve]") {
  auto spec = load_spec("fig1.rsa");
  auto result = synthesize(spec, Domain::Nat);
  REQUIRE(result.realizable);
  REQUIRE(result.transducer.has_value());
  CHECK_THROWS_AS(result.adam_strategy(), std::logic_error);
  CHECK(result.summary().find("verdict: realizable") != std::string::npos);
  const auto& t = *result.transducer;
  t.validate();
  CHECK(t.registers == spec.registers);

  auto sinks = classify_sinks(spec);
  const int q3 = spec.find_state("q3");
  const int q4 = spec.find_state("q4");
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto trace = simulate_transducer(spec, t, random_datasource(Domain::Nat, seed), 120);
    REQUIRE(trace.rows.size() == 120);
    CHECK_FALSE(trace.assignment_mismatch);
    for (const auto& row : trace.rows) CHECK(sinks[static_cast<std::size_t>(row.state)] != SinkKind::AdamWins);
    // The gap rM - rl shrinks on every pass through the q3-q4 loop.
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
      const auto& row = trace.rows[i];
      if (row.eve_state == q4 && row.state == q3) {
        const auto& before = trace.valuations[i];
        const auto& after = trace.valuations[i + 1];
        CHECK(after[0] - after[1] < before[0] - before[1]);
      }
    }
  }
}

TEST_CASE("up-we-go over the rationals is won by Adam", "[synth][adam]") {
  auto spec = load_spec("fig1.rsa");
  auto result = synthesize(spec, Domain::Rat);
  REQUIRE_FALSE(result.realizable);
  CHECK(result.summary().find("verdict: unrealizable") != std::string::npos);
  for (int policy = 0; policy < 4; ++policy) {
    auto adam = result.adam_strategy();
    auto trace = simulate_adam(spec, adam, [policy](int, std::size_t step) { return (policy >> (step % 2)) & 1; }, 60);
    CHECK(tail_priority(trace) % 2 == 1);
    for (std::size_t i = 0; i < trace.rows.size(); ++i)
      if (trace.rows[i].test.rel == std::vector<Rel>{Rel::Below, Rel::Above}) {
        CHECK(trace.rows[i].datum < trace.valuations[i][0]);
        CHECK(trace.rows[i].datum > trace.valuations[i][1]);
      }
  }
  auto adam = result.adam_strategy();
  adam.next();
  CHECK_THROWS_AS(adam.next(), std::logic_error);
}

TEST_CASE("Adam's natural-number data keeps the spacing invariant", "[synth][adam]") {
  auto spec = load_spec("nested_interval.rsa");
  auto result = synthesize(spec, Domain::Nat);
  REQUIRE_FALSE(result.realizable);
  for (int policy = 0; policy < 4; ++policy) {
    auto adam = result.adam_strategy();
    auto trace = simulate_adam(spec, adam, [policy](int, std::size_t step) { return (policy >> (step % 2)) & 1; }, 30);
    CHECK(tail_priority(trace) % 2 == 1);
    auto report = verify_assignment_invariant(adam.lifted_history(), adam.lifted_valuations(), adam.bound());
    CHECK(report.ok());
    for (const auto& row : trace.rows) CHECK(in_domain(row.datum, Domain::Nat));
  }
}

TEST_CASE("a spec that accepts everything is realizable", "[synth][eve]") {
  for (Domain d : {Domain::Nat, Domain::Rat}) {
    auto result = synthesize(load_spec("trivially_even.rsa"), d);
    REQUIRE(result.realizable);
    CHECK(result.transducer->num_states() >= 1);
  }
}

TEST_CASE("the transducer is refused when Adam wins", "[synth][eve]") {
  auto spec = load_spec("fig1.rsa");
  auto game = build_parity_game(spec, Domain::Rat);
  auto sol = solve_parity(game.game);
  CHECK_THROWS_AS(extract_eve_transducer(spec, game, sol), NotRealizable);
}

TEST_CASE("input-driven output reduction", "[synth][ido]") {
  auto echo = load_ido("echo.rsa");
  auto reduced = reduce_ido_to_one_sided(echo);
  CHECK(reduced.registers == echo.registers);
  CHECK(reduced.labels == echo.registers.names());
  reduced.validate();
  for (Domain d : {Domain::Nat, Domain::Rat}) CHECK(synthesize(echo, d).realizable);

  auto interval = load_ido("ido_interval.rsa");
  CHECK(reduce_ido_to_one_sided(interval).registers == interval.registers);
  CHECK(synthesize(interval, Domain::Nat).realizable);
  CHECK_FALSE(synthesize(interval, Domain::Rat).realizable);
}

TEST_CASE("simulation basics", "[synth][simulate]") {
  auto spec = load_spec("trivially_even.rsa");
  auto result = synthesize(spec, Domain::Nat);
  auto empty = simulate_transducer(spec, *result.transducer, scripted_datasource({Value(1)}), 0);
  CHECK(empty.rows.empty());
  CHECK(tail_priority(empty) == 0);
  auto trace = simulate_transducer(spec, *result.transducer, scripted_datasource({Value(3), Value(1), Value(5)}), 6);
  REQUIRE(trace.rows.size() == 6);
  CHECK(trace.rows[0].datum == 3);
  CHECK(trace.rows[3].datum == 3);
  CHECK(trace.valuations[1][0] == 3);
  CHECK(trace.valuations[2][0] == 3);  // 1 is not above r
  CHECK(trace.valuations[3][0] == 5);
  auto text = format_trace(trace, spec);
  CHECK(text.rfind("step\tdata\ttest\tasgn\tlabel\tstate\tpriority", 0) == 0);
  auto sinks = classify_sinks(load_spec("fig1.rsa"));
  auto fig1 = load_spec("fig1.rsa");
  CHECK(sinks[static_cast<std::size_t>(fig1.find_state("win"))] == SinkKind::EveWins);
  CHECK(sinks[static_cast<std::size_t>(fig1.find_state("q6"))] == SinkKind::AdamWins);
  CHECK(sinks[static_cast<std::size_t>(fig1.initial)] == SinkKind::None);
}
