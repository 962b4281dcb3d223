#pragma once

#include "regsynth/core/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rs {

// Ultimately periodic constraint sequence prefix . loop^omega.
struct LassoConstraintSeq {
  RegisterSet registers;
  std::vector<Constraint> prefix;
  std::vector<Constraint> loop;

  int num_registers() const { return registers.size(); }
  // Constraint read at the given moment (moment 0 is the first letter).
  const Constraint& at(std::size_t moment) const;
  std::size_t loop_start() const { return prefix.size(); }
  // Adjacency holds inside prefix.loop, from the prefix into the loop, and across the seam.
  bool consistent() const;
  // Loop rotated by k positions, with the prefix extended accordingly (same infinite word).
  LassoConstraintSeq rotated(std::size_t k) const;
  // Loop repeated `times` times (same infinite word).
  LassoConstraintSeq unrolled(std::size_t times) const;
};

// A file of constraints with an optional loop marker.
struct ConstraintFile {
  RegisterSet registers;
  std::vector<Constraint> constraints;
  std::optional<std::size_t> loop_start;
};

// Format: "registers a b c", then one constraint per line, "loop-start" before the
// first loop constraint, '#' comments. Throws std::invalid_argument with line info.
ConstraintFile parse_constraint_file(const std::string& text);
LassoConstraintSeq parse_lasso(const std::string& text);
std::string format_lasso(const LassoConstraintSeq& seq);

// Finite prefixes: adjacency of consecutive constraints.
bool prefix_consistent(const std::vector<Constraint>& prefix);

}  // namespace rs
