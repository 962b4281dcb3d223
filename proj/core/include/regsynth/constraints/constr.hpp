#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <optional>
#include <vector>

namespace rs {

// Register sets with the last-data register: r_d is appended as the last index.
RegisterSet with_data_register(const RegisterSet& regs);

// Constraint induced by playing test t and assignment a from state constraint pi
// over R_d (|R|+1 elements, r_d last). std::nullopt encodes OrderInconsistent:
// the test contradicts the current order, so no valuation realizes the move.
// When r_d sits alone in the gap selected by t, the new datum is placed equal to
// it; the old datum is not stored anywhere, so this choice never changes feasibility.
std::optional<Constraint> constr(const StateConstraint& pi, const Test& t, const Assignment& a);

// At most one class of primed registers contains no unprimed register.
bool satisfies_single_new_level(const Constraint& c);

struct ActionLetter {
  Test test;
  Assignment asgn;
  bool operator==(const ActionLetter&) const = default;
};

struct ActionLasso {
  int num_registers = 0;
  std::vector<ActionLetter> prefix;
  std::vector<ActionLetter> loop;
};

struct InducedLasso {
  // Set when some step is OrderInconsistent; the index of that step in the unrolled word.
  std::optional<std::size_t> inconsistent_at;
  LassoConstraintSeq seq;  // over R_d; valid when inconsistent_at is empty
};

// Threads constr from the all-equal state constraint, unrolling the action loop
// until (loop index, state constraint) repeats.
InducedLasso induced_lasso(const ActionLasso& w, const RegisterSet& regs);

}  // namespace rs
