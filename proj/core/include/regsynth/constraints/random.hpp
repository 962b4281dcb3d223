#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <random>
#include <vector>

namespace rs {

using Rng = std::mt19937_64;

// Registers named r1..rn.
RegisterSet default_registers(int n);

Order random_order(int m, Rng& rng);
// Random interleaving of the classes of two orders over n registers, where a class of
// the first may merge with a class of the second. Yields a constraint with the given
// start and end.
Constraint random_constraint_between(const StateConstraint& start, const StateConstraint& end, Rng& rng);
Constraint random_constraint(const StateConstraint& start, Rng& rng);

// Consistent random prefix; with zero_start the first start order is all-equal.
std::vector<Constraint> random_prefix(int n, std::size_t length, Rng& rng, bool zero_start = false);
// Consistent random lasso; the last loop constraint ends in the loop's first start order.
LassoConstraintSeq random_lasso(int n, std::size_t prefix_length, std::size_t loop_length, Rng& rng,
                                bool zero_start = false);
// Prefix induced by random valuations in [0, max_value]; satisfiable by construction.
std::vector<Constraint> random_valuation_prefix(int n, std::size_t length, long max_value, Rng& rng,
                                                bool zero_start = false);

}  // namespace rs
