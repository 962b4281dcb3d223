// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include "../tools/oracle.hpp"
#include "support.hpp"

#include "regsynth/constraints/chains.hpp"
#include "regsynth/constraints/lasso.hpp"
#include "regsynth/game/product.hpp"
#include "regsynth/synth/assign.hpp"
#include "regsynth/synth/pipeline.hpp"
#include "regsynth/synth/simulate.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace rs;
using rs::testing::load_spec;
using rs::testing::read_text;
using rs::testing::specs_path;

namespace {

// Pinned thresholds.
constexpr double kSynthSeconds = 10.0;
constexpr std::size_t kDataWords = 10'000;
constexpr std::size_t kWordLength = 200;
constexpr std::size_t kPrefixCases = 500;
constexpr double kPrefixSeconds = 60.0;
constexpr std::size_t kLassoCases = 1000;
constexpr std::size_t kNbaCases = 1000;
constexpr std::size_t kGameCases = 200;
constexpr std::size_t kAdamPlays = 200;
constexpr std::size_t kAdamPlayLength = 40;
constexpr double kGrowthCeiling = 100.0;
constexpr double kScalingSeconds = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << what;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail.str("");
    v.detail << "exception: " << e.what();
  }
  if (!v.pass) ++failures;
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " -- " << v.detail.str()
            << std::endl;
}

LassoConstraintSeq load_lasso(const std::string& name) { return parse_lasso(read_text(specs_path("lassos/" + name))); }

void separation(Verdict& v) {
  auto spec = load_spec("fig1.rsa");
  auto t0 = Clock::now();
  auto nat = synthesize(spec, Domain::Nat);
  const double nat_s = seconds_since(t0);
  t0 = Clock::now();
  auto rat = synthesize(spec, Domain::Rat);
  const double rat_s = seconds_since(t0);
  v.require(nat.realizable && nat.transducer, "nat not realizable");
  v.require(!rat.realizable, "rat realizable");
  v.require(nat_s < kSynthSeconds && rat_s < kSynthSeconds, "synthesis too slow");
  if (!v.pass) return;

  const auto& t = *nat.transducer;
  const auto sinks = classify_sinks(spec);
  const int q3 = spec.find_state("q3");
  const int q4 = spec.find_state("q4");
  std::size_t loops = 0, sink_hits = 0, non_decreasing = 0, mismatches = 0;
  for (std::size_t word = 0; word < kDataWords; ++word) {
    auto source = random_datasource(Domain::Nat, 1000 + word);
    TransducerRun run(t);
    Valuation val = zero_valuation(spec.registers.size());
    int q = spec.initial;
    for (std::size_t step = 0; step < kWordLength; ++step) {
      const Value d = source(val, step);
      const Test test = test_of(val, d);
      const auto& mv = spec.adam_delta[static_cast<std::size_t>(q)][test.code()];
      const auto out = run.feed(d);
      if (!(out.asgn == mv.asgn)) ++mismatches;
      Valuation next = update_valuation(val, d, mv.asgn);
      const int e = mv.target;
      const int q_next = spec.eve_delta[static_cast<std::size_t>(e)][static_cast<std::size_t>(out.label)];
      if (sinks[static_cast<std::size_t>(e)] == SinkKind::AdamWins ||
          sinks[static_cast<std::size_t>(q_next)] == SinkKind::AdamWins)
        ++sink_hits;
      if (q == q3 && e == q4 && q_next == q3) {
        ++loops;
        if (!(next[0] - next[1] < val[0] - val[1])) ++non_decreasing;
      }
      val = std::move(next);
      q = q_next;
    }
  }
  v.require(mismatches == 0, "transducer assignments diverge from the automaton");
  v.require(sink_hits == 0, "Adam-win sink entered");
  v.require(non_decreasing == 0, "rM - rl did not decrease on a loop");
  v.require(loops > 0, "no 3-4 loop exercised");

  // Over Q the Adam strategy defeats every memory-one Eve policy.
  std::size_t defeated = 0;
  for (int policy = 0; policy < 16; ++policy) {
    auto adam = rat.adam_strategy();
    auto trace = simulate_adam(spec, adam,
                               [policy](int eve_state, std::size_t) { return (policy >> (eve_state % 4)) & 1; }, 80);
    if (tail_priority(trace) % 2 == 1) ++defeated;
  }
  v.require(defeated == 16, "an Eve policy survives over Q");
  if (v.pass)
    v.detail << "nat realizable in " << nat_s << " s, rat unrealizable in " << rat_s << " s; " << kDataWords
             << " words x " << kWordLength << " steps, " << loops << " 3-4 loops all shrinking, Adam beat 16/16 Eve policies";
}

void canonical_facts(Verdict& v) {
  auto dec = load_lasso("decreasing.lasso");
  v.require(is_satisfiable_Q(dec), "decreasing not Q-satisfiable");
  v.require(!is_satisfiable_N(dec), "decreasing N-satisfiable");
  v.require(!is_satisfiable_N(load_lasso("fig1_loop.lasso")), "up-we-go loop N-satisfiable");
  auto c0 = load_lasso("c0_example.lasso");
  v.require(!is_zero_satisfiable_N(c0), "C0 example 0-satisfiable in N");
  v.require(!is_zero_satisfiable_Q(c0), "C0 example 0-satisfiable in Q");
  if (v.pass) v.detail << "5/5 verdicts exact";
}

void suite(Verdict& v, const oracle::SuiteResult& r, std::size_t min_cases, double elapsed, double limit) {
  v.require(r.cases >= min_cases, "too few cases");
  v.require(r.passed(), std::to_string(r.failures) + " failures, first: " + r.first_failure);
  v.require(elapsed < limit, "too slow");
  if (v.pass) v.detail << r.cases << " cases, 0 disagreements, " << elapsed << " s";
}

void data_assignment(Verdict& v) {
  std::size_t plays = 0, moments = 0, pairs = 0;
  unsigned max_bound = 0;
  auto play = [&](const OneSidedSpec& spec, const SynthesisResult& result, int policy) {
    auto adam = result.adam_strategy();
    simulate_adam(spec, adam, [policy](int, std::size_t step) { return (policy >> (step % 3)) & 1; }, kAdamPlayLength);
    auto rep = verify_assignment_invariant(adam.lifted_history(), adam.lifted_valuations(), adam.bound());
    v.require(rep.ok(), "invariant broken at moment " + std::to_string(rep.first_failure));
    ++plays;
    moments += adam.lifted_history().size();
    pairs += rep.checked_pairs;
    max_bound = std::max(max_bound, adam.bound());
  };
  auto nested = load_spec("nested_interval.rsa");
  auto nested_result = synthesize(nested, Domain::Nat);
  v.require(!nested_result.realizable, "nested interval realizable over N");
  for (int policy = 0; policy < 8 && v.pass; ++policy) play(nested, nested_result, policy);

  std::mt19937_64 rng(7);
  while (plays < kAdamPlays && v.pass) {
    const int n = 1 + static_cast<int>(rng() % 2);
    auto spec = oracle::random_spec(n, 2, 2, 2, 3, rng);
    auto result = synthesize(spec, Domain::Nat);
    if (result.realizable || result.adam_bound > 2000) continue;
    for (int policy = 0; policy < 4 && v.pass; ++policy) play(spec, result, policy);
  }

  // Sabotaged insertion loses within B steps; the honest assigner survives.
  for (unsigned b = 3; b <= 5 && v.pass; ++b) {
    auto sabotaged = run_tightness_adversary(DataAssigner(3, 2, b, DataAssigner::Insertion::JustAbove), 4 * b);
    v.require(sabotaged.defeated_at && *sabotaged.defeated_at < b,
              "sabotaged assigner not defeated within B=" + std::to_string(b));
    auto honest = run_tightness_adversary(DataAssigner(3, 2, b), 4 * b);
    v.require(!honest.defeated_at, "honest assigner defeated at B=" + std::to_string(b));
  }
  if (v.pass)
    v.detail << plays << " plays, " << moments << " moments, " << pairs << " spaced pairs checked, max B " << max_bound
             << "; sabotaged assigner defeated within B for B=3..5";
}

void scaling(Verdict& v) {
  auto t0 = Clock::now();
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= 3; ++k) {
    auto game = build_parity_game(oracle::rotating_spec(k), Domain::Nat);
    sizes.push_back(static_cast<std::size_t>(game.game.num_vertices()));
  }
  const double elapsed = seconds_since(t0);
  v.detail << "vertices";
  for (std::size_t i = 0; i < sizes.size(); ++i) v.detail << " |R|=" << i + 1 << ":" << sizes[i];
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    const double factor = static_cast<double>(sizes[i]) / static_cast<double>(sizes[i - 1]);
    v.detail << " x" << factor;
    v.require(factor <= kGrowthCeiling, "growth factor above ceiling");
  }
  v.detail << ", " << elapsed << " s";
  v.require(elapsed < kScalingSeconds, "too slow");
}

}  // namespace

int main() {
  report(1, "up-we-go separation", separation);
  report(2, "canonical satisfiability facts", canonical_facts);

  oracle::Options opts;
  opts.prefix_cases = kPrefixCases;
  opts.lasso_cases = kLassoCases;
  opts.nba_cases = kNbaCases;
  opts.game_cases = kGameCases;
  auto timed = [&](auto fn) {
    auto t0 = Clock::now();
    auto r = fn(opts);
    return std::make_pair(r, seconds_since(t0));
  };
  report(3, "finite-prefix oracle equivalence", [&](Verdict& v) {
    auto [r, s] = timed(oracle::prefix_suite);
    suite(v, r, kPrefixCases, s, kPrefixSeconds);
  });
  report(4, "lasso cross-validation", [&](Verdict& v) {
    auto [r, s] = timed(oracle::lasso_suite);
    suite(v, r, kLassoCases, s, 1e9);
  });
  report(5, "determinization correctness", [&](Verdict& v) {
    auto [r, s] = timed(oracle::determinization_suite);
    suite(v, r, 6 * kNbaCases, s, 1e9);
  });
  report(6, "solver correctness and determinacy", [&](Verdict& v) {
    auto [r, s] = timed(oracle::solver_suite);
    suite(v, r, kGameCases, s, 1e9);
  });
  report(7, "data-assignment soundness", data_assignment);
  report(8, "bounded product growth per register", scaling);
  return failures == 0 ? 0 : 1;
}
