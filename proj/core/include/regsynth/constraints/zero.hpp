#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <vector>

namespace rs {

// Consistent, starts all-equal, and has no decreasing chain of depth >= 1 from moment 0.
bool is_meaningful(const std::vector<Constraint>& prefix);

// Incremental lifting: appends a register r_0 (last index) that always holds 0.
class ZeroLifter {
 public:
  explicit ZeroLifter(int num_registers);
  // Lifts the next constraint; throws std::invalid_argument when the sequence stops
  // being meaningful at this step.
  Constraint lift(const Constraint& c);
  // Registers currently equal to r_0.
  const std::vector<bool>& zero_class() const { return zero_; }

 private:
  int n_;
  bool first_ = true;
  std::vector<bool> zero_;
};

// Lifts a meaningful prefix to R plus r_0; throws std::invalid_argument otherwise.
std::vector<Constraint> c0nv_add_zero_register(const std::vector<Constraint>& prefix);
// Lasso version: unrolls until (loop position, zero class) repeats.
LassoConstraintSeq c0nv_add_zero_register(const LassoConstraintSeq& seq);

}  // namespace rs
