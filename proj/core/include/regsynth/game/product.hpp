#pragma once

#include "regsynth/core/value.hpp"
#include "regsynth/game/arena.hpp"
#include "regsynth/game/parity_game.hpp"
#include "regsynth/omega/combine.hpp"

#include <memory>

namespace rs {

// Back-reference from a product vertex to its components.
struct ProductRef {
  int arena_vertex = -1;  // -1 for the sink
  Order pi;               // state constraint over R plus r_d (r_d last)
  int dpa_state = 0;
  int iar_record = 0;
  bool sink = false;      // Eve-won sink reached through an order-inconsistent test
};

// Feasibility game as a finite parity game: a play is won by Eve iff the induced
// constraint word is not feasible in the domain (its infeasibility automaton accepts)
// or the visited automaton states satisfy its parity condition. Adam moves feed the
// constraint built by constr into the automaton; Eve moves emit its lowest priority.
struct ProductGame {
  Domain domain = Domain::Nat;
  Arena arena;
  ParityGame game;
  std::vector<ProductRef> refs;
  DpaPtr infeasible;  // over R plus r_d
  std::shared_ptr<IarCombiner> iar;
  int sink = -1;      // vertex id of the inconsistency sink, -1 if never reached

  // Successor of Adam vertex v for the given test code.
  int adam_successor(int v, std::uint32_t test) const;
  // Successor of Eve vertex v for the given label.
  int eve_successor(int v, int label) const;
  int spec_state(int v) const;
};

// `max_vertices` guards against blow-up; std::length_error when exceeded.
ProductGame build_parity_game(const OneSidedSpec& spec, Domain domain, std::size_t max_vertices = 2'000'000);

}  // namespace rs
