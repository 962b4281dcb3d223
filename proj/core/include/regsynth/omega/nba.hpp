#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rs {

// Ultimately periodic word prefix . loop^omega over constraint letters.
struct LassoWord {
  std::vector<Constraint> prefix;
  std::vector<Constraint> loop;
};

LassoWord lasso_word(const LassoConstraintSeq& seq);

// Nondeterministic Buchi automaton over constraint letters with at most 64 states.
// The alphabet is implicit: successors are computed per letter.
struct Nba {
  using StateSet = std::uint64_t;
  static constexpr int kMaxStates = 64;

  int num_registers = 0;
  int num_states = 0;
  StateSet initial = 0;
  StateSet accepting = 0;
  std::function<StateSet(int state, const Constraint& letter)> successors;
  std::vector<std::string> state_names;

  StateSet post(StateSet from, const Constraint& letter) const;
  bool is_accepting(int q) const { return (accepting >> q) & 1U; }
};

inline Nba::StateSet state_bit(int q) { return Nba::StateSet{1} << q; }

// Disjoint union; the result accepts the union of the languages.
Nba nba_union(const std::vector<Nba>& parts);

// Accepting-cycle search in the product with the lasso graph.
bool nba_lasso_member(const Nba& a, const LassoWord& w);

}  // namespace rs
