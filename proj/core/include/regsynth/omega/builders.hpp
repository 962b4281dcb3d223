#pragma once

#include "regsynth/omega/combine.hpp"
#include "regsynth/omega/safra.hpp"

namespace rs {

// Accepts the consistent sequences; with require_zero_start also C0 all-equal on R.
// States: a fresh initial state, one state per end order seen, and a rejecting sink.
class ConsistencyDpa : public LazyDpa {
 public:
  ConsistencyDpa(int num_registers, bool require_zero_start);
  int min_priority() const override { return 1; }
  int max_priority() const override { return 2; }
  std::string state_label(int state) const override;

 protected:
  std::pair<Key, int> compute(const Key& from, const Constraint& letter) const override;

 private:
  bool zero_start_;
};

DpaPtr build_consistency_dpa(int num_registers, bool require_zero_start = false);

// Guesses a moment and an atom r' ~ s' of that letter, accepts when the next letter
// contradicts it.
Nba build_inconsistency_nba(int num_registers);
// Infinite decreasing one-way chain: accepting on strict steps.
Nba build_decreasing_chain_nba(int num_registers);
// Stable chain with an increasing chain strictly below it, accepting on strict steps.
Nba build_trespassing_chain_nba(int num_registers);
// C0 not all-equal, or a decrease of depth >= 1 reachable from moment 0.
Nba build_zero_start_violation_nba(int num_registers);

// The three chain conditions: decreasing, trespassing, zero-start violation.
std::vector<Nba> build_bad_chain_nbas(int num_registers);

// Complement of the determinized union of the bad-chain automata, plus the inconsistency
// detector when include_consistency is set. On consistent lassos it accepts exactly the
// 0-satisfiable sequences over the naturals.
DpaPtr build_quasi_feasible_dpa(int num_registers, bool include_consistency = true);
// Determinized union itself (accepts the sequences that are not quasi-feasible).
DpaPtr build_infeasibility_dpa(int num_registers, bool include_consistency = true);

}  // namespace rs
