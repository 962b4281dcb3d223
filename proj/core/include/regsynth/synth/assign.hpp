#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <optional>
#include <random>
#include <vector>

namespace rs {

// Online data-assignment function over the naturals. It works on sequences that
// already contain a register fixed at 0 and satisfy the single-new-level property, and
// keeps consecutive values x > y at least 2^(B - d_xy) apart, where d_xy is the
// connecting depth of x and y. Values: a copy for an existing level, current maximum
// plus 2^B for a new top level, the floor of the midpoint for an insertion.
class DataAssigner {
 public:
  enum class Insertion { Midpoint, JustAbove };  // JustAbove: lower neighbour + 1 (sabotaged)

  // zero_register: index of the register that always holds 0.
  DataAssigner(int num_registers, int zero_register, unsigned bound, Insertion mode = Insertion::Midpoint);

  // Valuation after reading c; c must start in the order of the current valuation.
  // Throws std::invalid_argument when c has two new levels or a level below zero.
  Valuation next(const Constraint& c) const;
  // Applies next(c) and records the constraint.
  const Valuation& advance(const Constraint& c);

  const Valuation& current() const { return current_; }
  const std::vector<Constraint>& history() const { return history_; }
  const std::vector<Valuation>& valuations() const { return valuations_; }
  unsigned bound() const { return bound_; }
  int num_registers() const { return n_; }
  int zero_register() const { return zero_; }

 private:
  int n_;
  int zero_;
  unsigned bound_;
  Insertion mode_;
  Valuation current_;
  std::vector<Constraint> history_;
  std::vector<Valuation> valuations_;
};

struct InvariantReport {
  bool constraints_satisfied = true;
  bool spacing_holds = true;
  bool nonnegative = true;
  std::size_t first_failure = 0;  // moment of the first failure
  std::size_t checked_pairs = 0;
  bool ok() const { return constraints_satisfied && spacing_holds && nonnegative; }
};

// Checks that every valuation satisfies its constraint and that
// v_m(x) - v_m(y) >= 2^(B - d_xy) at every moment m >= 1 for every x > y.
InvariantReport verify_assignment_invariant(const std::vector<Constraint>& prefix,
                                            const std::vector<Valuation>& valuations, unsigned bound);

// Greedy adversary against the spacing guarantee: repeatedly squeezes the least-spaced pair by
// moving one register strictly between them, keeping the two-way chain depth of the
// prefix at most B. Stops when the assigner produces a valuation that violates the
// constraint just played (returns that step) or after max_steps.
struct AdversaryOutcome {
  std::optional<std::size_t> defeated_at;  // index into the played constraints
  std::vector<Constraint> played;
  std::vector<Valuation> valuations;
  int max_depth = 0;
};

AdversaryOutcome run_tightness_adversary(DataAssigner assigner, std::size_t max_steps);

}  // namespace rs
