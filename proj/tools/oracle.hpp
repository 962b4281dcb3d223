#pragma once

#include "regsynth/core/spec.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rs::oracle {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct Options {
  std::uint64_t seed = 1;
  std::size_t prefix_cases = 500;
  std::size_t lasso_cases = 1000;
  std::size_t nba_cases = 1000;  // per automaton
  std::size_t game_cases = 200;
  // Replaces one side of every comparison by a deliberately wrong variant.
  bool inject_fault = false;
};

// Random consistent and inconsistent prefixes (|R| <= 3, length <= 4): brute-force search
// over {0..|R|(L+1)} against the chain-based finite-prefix predicates.
SuiteResult prefix_suite(const Options& o);
// Random lassos (|R| <= 3, prefix and loop length <= 3): chain verdict, quasi-feasibility
// automaton and max-plus monitor with zero-start checks agree pairwise.
SuiteResult lasso_suite(const Options& o);
// Each bad-chain NBA over two registers and three small hand-built NBAs against their
// determinizations.
SuiteResult determinization_suite(const Options& o);
// Random parity games (<= 8 vertices, priorities <= 4): Zielonka against brute force,
// region partition, and verification of both strategies.
SuiteResult solver_suite(const Options& o);

std::vector<SuiteResult> run_all(const Options& o);
// Deterministic text report, one line per suite.
std::string format_report(const std::vector<SuiteResult>& results);

// Family with k registers used for scaling measurements: Adam state i must store a
// datum above r_i into r_i, Eve answers with any label, and the next round uses
// register i+1 (cyclically). Failing the guard leads to an Eve-won sink.
OneSidedSpec rotating_spec(int k);

// Random total deterministic spec: Adam and Eve states alternate, every test gets a
// random assignment and target, priorities are in 1..max_priority.
OneSidedSpec random_spec(int num_registers, int num_adam, int num_eve, int num_labels, int max_priority,
                         std::mt19937_64& rng);

}  // namespace rs::oracle
