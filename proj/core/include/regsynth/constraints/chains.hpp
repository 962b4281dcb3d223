#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <optional>
#include <vector>

namespace rs {

struct ChainVerdictN {
  bool consistent = false;
  bool has_inf_decreasing_1w = false;
  bool has_trespassing_inf_increasing_1w = false;
  bool c0_all_equal = false;
  bool has_decrease_from_0 = false;

  bool satisfiable() const { return consistent && !has_inf_decreasing_1w && !has_trespassing_inf_increasing_1w; }
  bool zero_satisfiable() const { return satisfiable() && c0_all_equal && !has_decrease_from_0; }
};

// Infinite-depth decreasing one-way chain: a strict edge inside a strongly connected
// component of the loop graph over (register, loop position).
bool has_infinite_decreasing_1w(const LassoConstraintSeq& seq);
bool has_infinite_increasing_1w(const LassoConstraintSeq& seq);

struct StableChain {
  std::size_t start_moment = 0;
  // Registers visited from start_moment on: `lead` once, then `cycle` forever.
  std::vector<int> lead;
  std::vector<int> cycle;
  // Register at moment start_moment + k.
  int register_at(std::size_t k) const;
};

// Top stable chain starting at the loop entry; it lies non-strictly above every stable
// chain starting later.
std::optional<StableChain> maximal_stable_chain(const LassoConstraintSeq& seq);

// Infinite-depth increasing one-way chain lying strictly below some stable chain.
bool has_trespassing_infinite_increasing_1w(const LassoConstraintSeq& seq);

struct ZeroStart {
  bool c0_all_equal = false;
  bool has_decrease_from_0 = false;
};
ZeroStart zero_start_checks(const LassoConstraintSeq& seq);
ZeroStart zero_start_checks(const std::vector<Constraint>& prefix);

ChainVerdictN chain_verdict_N(const LassoConstraintSeq& seq);
bool is_zero_satisfiable_N(const LassoConstraintSeq& seq);
bool is_satisfiable_N(const LassoConstraintSeq& seq);
bool is_satisfiable_Q(const LassoConstraintSeq& seq);
bool is_zero_satisfiable_Q(const LassoConstraintSeq& seq);

// Finite-prefix characterization: satisfiable in N iff consistent; 0-satisfiable iff
// additionally C0 is all-equal and no decreasing chain of depth >= 1 leaves moment 0.
struct PrefixVerdict {
  bool consistent = false;
  ZeroStart zero;
  bool satisfiable() const { return consistent; }
  bool zero_satisfiable() const { return consistent && zero.c0_all_equal && !zero.has_decrease_from_0; }
};
PrefixVerdict prefix_verdict(const std::vector<Constraint>& prefix);

}  // namespace rs
