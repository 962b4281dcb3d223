#pragma once

#include "regsynth/core/order.hpp"

#include <optional>
#include <vector>

namespace rs {

// Exhaustive search for natural-number valuations v_0..v_L with values in {0..K},
// K = n*(L+1), satisfying C_0..C_{L-1}; zero_start pins v_0 to all zeros.
std::optional<std::vector<Valuation>> brute_force_prefix_N(const std::vector<Constraint>& prefix, bool zero_start);

// A point of a two-way chain and the relation to the next point ('>' or '=').
struct ChainStep {
  int reg = 0;
  int moment = 0;
  bool strict_to_next = false;
};

// Validates a decreasing two-way chain against the prefix (moments 0..L) and returns
// its depth, or std::nullopt if some step is not backed by an atom.
std::optional<int> two_way_chain_depth(const std::vector<Constraint>& prefix, const std::vector<ChainStep>& chain);

// Maximum depth of right two-way chains (chains never visiting a moment earlier than
// their start) in the prefix.
int max_r2w_depth(const std::vector<Constraint>& prefix);

// Largest depth of xy-connecting chains at moment m = prefix.size(): r2w chains
// (a,i) ... (x,m) > (y,m) ... (b,j) confined to moments [i,m]. Requires x > y at moment m.
int connecting_depth(const std::vector<Constraint>& prefix, int x, int y);
// All connecting depths at moment prefix.size(); entries with x <= y are -1.
std::vector<std::vector<int>> connecting_depths(const std::vector<Constraint>& prefix);

}  // namespace rs
