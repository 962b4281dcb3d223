#include "oracle.hpp"

#include "regsynth/constraints/chains.hpp"
#include "regsynth/constraints/maxplus.hpp"
#include "regsynth/constraints/prefix.hpp"
#include "regsynth/constraints/random.hpp"
#include "regsynth/game/parity_game.hpp"
#include "regsynth/game/solver.hpp"
#include "regsynth/omega/builders.hpp"
#include "regsynth/omega/safra.hpp"

#include <sstream>

namespace rs::oracle {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

// Breaks consistency at a random loop position now and then.
LassoConstraintSeq random_test_lasso(int n, Rng& rng) {
  auto seq = random_lasso(n, rng() % 4, 1 + rng() % 3, rng, rng() % 2 == 0);
  if (rng() % 6 == 0) seq.loop[rng() % seq.loop.size()] = random_constraint(random_order(n, rng), rng);
  return seq;
}

// Visits r0 < r0' infinitely often.
Nba infinitely_often_increase(int n) {
  Nba a;
  a.num_registers = n;
  a.num_states = 2;
  a.initial = state_bit(0);
  a.accepting = state_bit(1);
  a.state_names = {"wait", "seen"};
  a.successors = [n](int, const Constraint& c) { return c.cmp(0, n + 0) < 0 ? state_bit(1) : state_bit(0); };
  return a;
}

// From some moment on, r0 = r1 forever.
Nba eventually_always_equal(int n) {
  Nba a;
  a.num_registers = n;
  a.num_states = 2;
  a.initial = state_bit(0);
  a.accepting = state_bit(1);
  a.state_names = {"wait", "equal"};
  a.successors = [](int q, const Constraint& c) -> Nba::StateSet {
    const bool eq = c.cmp(0, 1) == 0;
    if (q == 0) return state_bit(0) | (eq ? state_bit(1) : 0);
    return eq ? state_bit(1) : 0;
  };
  return a;
}

// Once r0 > r1 has been seen, r1 increases infinitely often.
Nba guarded_recurrence(int n) {
  Nba a;
  a.num_registers = n;
  a.num_states = 3;
  a.initial = state_bit(0);
  a.accepting = state_bit(2);
  a.state_names = {"wait", "armed", "hit"};
  a.successors = [n](int q, const Constraint& c) -> Nba::StateSet {
    if (q == 0) return c.cmp(0, 1) > 0 ? (state_bit(0) | state_bit(1)) : state_bit(0);
    return c.cmp(1, n + 1) < 0 ? state_bit(2) : state_bit(1);
  };
  return a;
}

}  // namespace

SuiteResult prefix_suite(const Options& o) {
  SuiteResult r;
  r.name = "prefix";
  Rng rng(o.seed ^ 0x1111);
  for (std::size_t k = 0; k < o.prefix_cases; ++k) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const std::size_t len = 1 + rng() % 4;
    auto prefix = random_prefix(n, len, rng, rng() % 2 == 0);
    if (rng() % 5 == 0) prefix[rng() % prefix.size()] = random_constraint(random_order(n, rng), rng);
    const auto verdict = prefix_verdict(prefix);
    const bool any = brute_force_prefix_N(prefix, false).has_value();
    const bool zero = brute_force_prefix_N(prefix, true).has_value();
    bool predicted_zero = verdict.zero_satisfiable();
    if (o.inject_fault) predicted_zero = verdict.consistent && verdict.zero.c0_all_equal;
    std::ostringstream what;
    what << "n=" << n << " len=" << len << " brute=" << any << "/" << zero << " chains=" << verdict.satisfiable() << "/"
         << predicted_zero;
    record(r, any == verdict.satisfiable() && zero == predicted_zero, what.str());
  }
  return r;
}

SuiteResult lasso_suite(const Options& o) {
  SuiteResult r;
  r.name = "lasso";
  Rng rng(o.seed ^ 0x2222);
  std::vector<DpaPtr> dpas;
  std::vector<MaxPlusMonitor> monitors;
  for (int n = 1; n <= 3; ++n) {
    dpas.push_back(build_quasi_feasible_dpa(n));
    monitors.push_back(build_max_monitor(n));
  }
  for (std::size_t k = 0; k < o.lasso_cases; ++k) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto seq = random_test_lasso(n, rng);
    const bool chains = is_zero_satisfiable_N(seq);
    const bool dpa = dpa_lasso_member(*dpas[static_cast<std::size_t>(n - 1)], lasso_word(seq));
    auto mv = monitors[static_cast<std::size_t>(n - 1)].evaluate(seq);
    bool monitor = o.inject_fault ? mv.consistent : mv.accepts();
    if (monitor) {
      auto z = zero_start_checks(seq);
      monitor = z.c0_all_equal && !z.has_decrease_from_0;
    }
    std::ostringstream what;
    what << "n=" << n << " chains=" << chains << " dpa=" << dpa << " monitor=" << monitor << "\n" << format_lasso(seq);
    record(r, chains == dpa && dpa == monitor, what.str());
  }
  return r;
}

SuiteResult determinization_suite(const Options& o) {
  SuiteResult r;
  r.name = "determinization";
  Rng rng(o.seed ^ 0x3333);
  const int n = 2;
  std::vector<Nba> nbas = build_bad_chain_nbas(n);
  nbas.push_back(infinitely_often_increase(n));
  nbas.push_back(eventually_always_equal(n));
  nbas.push_back(guarded_recurrence(n));
  for (std::size_t a = 0; a < nbas.size(); ++a) {
    auto det = determinize(nbas[a]);
    for (std::size_t k = 0; k < o.nba_cases; ++k) {
      auto w = lasso_word(random_test_lasso(n, rng));
      const bool nba = nba_lasso_member(nbas[a], w);
      bool dpa = dpa_lasso_member(*det, w);
      if (o.inject_fault && k % 7 == 0) dpa = !dpa;
      record(r, nba == dpa, "automaton " + std::to_string(a) + " case " + std::to_string(k));
    }
  }
  return r;
}

SuiteResult solver_suite(const Options& o) {
  SuiteResult r;
  r.name = "solver";
  Rng rng(o.seed ^ 0x4444);
  for (std::size_t k = 0; k < o.game_cases; ++k) {
    const int nv = 1 + static_cast<int>(rng() % 8);
    const int maxp = 1 + static_cast<int>(rng() % 4);
    auto g = random_parity_game(nv, maxp, 3, rng);
    auto sol = solve_parity(g);
    if (o.inject_fault) sol.winner[0] = sol.winner[0] == Player::Eve ? Player::Adam : Player::Eve;
    auto brute = brute_force_solve(g);
    bool ok = brute == sol.winner && sol.winner.size() == static_cast<std::size_t>(nv);
    ok = ok && verify_strategy(g, sol.strategy, Player::Eve, region_of(sol, Player::Eve));
    ok = ok && verify_strategy(g, sol.strategy, Player::Adam, region_of(sol, Player::Adam));
    record(r, ok, "game " + std::to_string(k) + " with " + std::to_string(nv) + " vertices");
  }
  return r;
}

OneSidedSpec rotating_spec(int k) {
  OneSidedSpec s;
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("r" + std::to_string(i));
  s.registers = RegisterSet(names);
  s.labels = {"a", "b"};
  // States: adam_i = 2i, eve_i = 2i+1, then the sink pair.
  for (int i = 0; i < k; ++i) {
    s.states.push_back({"store" + std::to_string(i + 1), Player::Adam, 1});
    s.states.push_back({"answer" + std::to_string(i + 1), Player::Eve, 1});
  }
  const int sink_eve = 2 * k, sink_adam = 2 * k + 1;
  s.states.push_back({"won", Player::Eve, 2});
  s.states.push_back({"wonr", Player::Adam, 2});
  s.initial = 0;
  s.adam_delta.assign(s.states.size(), {});
  s.eve_delta.assign(s.states.size(), {});
  for (int i = 0; i < k; ++i) {
    auto& row = s.adam_delta[static_cast<std::size_t>(2 * i)];
    for (const auto& t : all_tests(k)) {
      if (t.rel[static_cast<std::size_t>(i)] == Rel::Above) {
        Assignment a;
        a.insert(i);
        row.push_back({a, 2 * i + 1});
      } else {
        row.push_back({Assignment{}, sink_eve});
      }
    }
    s.eve_delta[static_cast<std::size_t>(2 * i + 1)] = {2 * ((i + 1) % k), 2 * ((i + 1) % k)};
  }
  s.adam_delta[static_cast<std::size_t>(sink_adam)].assign(num_tests(k), AdamMove{Assignment{}, sink_eve});
  s.eve_delta[static_cast<std::size_t>(sink_eve)] = {sink_adam, sink_adam};
  s.validate();
  return s;
}

OneSidedSpec random_spec(int num_registers, int num_adam, int num_eve, int num_labels, int max_priority,
                         std::mt19937_64& rng) {
  OneSidedSpec s;
  std::vector<std::string> names;
  for (int i = 1; i <= num_registers; ++i) names.push_back("r" + std::to_string(i));
  s.registers = RegisterSet(names);
  for (int l = 0; l < num_labels; ++l) s.labels.push_back(std::string(1, static_cast<char>('a' + l)));
  std::uniform_int_distribution<int> prio(1, max_priority);
  for (int i = 0; i < num_adam; ++i) s.states.push_back({"A" + std::to_string(i), Player::Adam, prio(rng)});
  for (int i = 0; i < num_eve; ++i) s.states.push_back({"E" + std::to_string(i), Player::Eve, prio(rng)});
  s.initial = 0;
  s.adam_delta.assign(s.states.size(), {});
  s.eve_delta.assign(s.states.size(), {});
  const std::uint32_t full = (1U << num_registers) - 1U;
  for (int i = 0; i < num_adam; ++i)
    for (std::uint32_t t = 0; t < num_tests(num_registers); ++t) {
      Assignment a;
      a.mask = static_cast<std::uint32_t>(rng()) & full;
      s.adam_delta[static_cast<std::size_t>(i)].push_back({a, num_adam + static_cast<int>(rng() % static_cast<unsigned>(num_eve))});
    }
  for (int e = 0; e < num_eve; ++e)
    for (int l = 0; l < num_labels; ++l)
      s.eve_delta[static_cast<std::size_t>(num_adam + e)].push_back(static_cast<int>(rng() % static_cast<unsigned>(num_adam)));
  s.validate();
  return s;
}

std::vector<SuiteResult> run_all(const Options& o) {
  return {prefix_suite(o), lasso_suite(o), determinization_suite(o), solver_suite(o)};
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  for (const auto& s : results) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.cases - s.failures << "/" << s.cases << " agree\n";
    if (!s.passed()) out << "  first failure: " << s.first_failure << '\n';
  }
  return out.str();
}

}  // namespace rs::oracle
