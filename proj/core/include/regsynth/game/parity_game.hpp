#pragma once

#include "regsynth/core/spec.hpp"

#include <random>
#include <string>
#include <vector>

namespace rs {

// Finite vertex-priority max-parity game: Eve wins a play when the largest priority seen
// infinitely often is even.
struct ParityGame {
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  std::vector<std::string> names;  // optional
  int initial = 0;

  int num_vertices() const { return static_cast<int>(owner.size()); }
  std::size_t num_edges() const;
  int max_priority() const;
  int add_vertex(Player p, int priority, std::string name = {});
  // Throws std::invalid_argument on dead ends, bad edges or priorities below 0.
  void validate() const;
};

// Relabels priorities order-preservingly with parity kept, using the fewest values >= 1.
void compress_priorities(ParityGame& g);

// Winning regions per vertex and a positional strategy: strategy[v] is the chosen
// successor for the owner of v (meaningful on the owner's winning region).
struct ParitySolution {
  std::vector<Player> winner;
  std::vector<int> strategy;
  bool eve_wins(int v) const { return winner[static_cast<std::size_t>(v)] == Player::Eve; }
  std::size_t region_size(Player p) const;
};

// True when, in the graph where owner-vertices follow the strategy and the other player
// moves freely, the region is closed and every cycle reachable from it is won by owner.
bool verify_strategy(const ParityGame& g, const std::vector<int>& strategy, Player owner,
                     const std::vector<bool>& region);
// Region of `owner` in a solution.
std::vector<bool> region_of(const ParitySolution& s, Player owner);

// Exhaustive enumeration of positional strategies; throws std::invalid_argument when the
// number of strategy profiles exceeds max_profiles.
std::vector<Player> brute_force_solve(const ParityGame& g, std::size_t max_profiles = 1u << 20);

ParityGame random_parity_game(int num_vertices, int max_priority, int max_out_degree, std::mt19937_64& rng);

std::string export_dot(const ParityGame& g);
std::string solve_report(const ParityGame& g, const ParitySolution& s, std::size_t max_rows = 50);

}  // namespace rs
