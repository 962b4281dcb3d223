#pragma once

#include "regsynth/core/model.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rs {

enum class Player { Adam, Eve };

struct SpecState {
  std::string name;
  Player owner = Player::Adam;
  int priority = 1;
};

struct AdamMove {
  Assignment asgn;
  int target = -1;
};

// Deterministic one-sided register automaton. Adam states read data (tests and
// assignments), Eve states read labels. Parity: the largest priority seen
// infinitely often must be even.
struct OneSidedSpec {
  RegisterSet registers;
  std::vector<std::string> labels;
  std::vector<SpecState> states;
  int initial = 0;
  // [state][test code]; empty rows for Eve states.
  std::vector<std::vector<AdamMove>> adam_delta;
  // [state][label]; empty rows for Adam states.
  std::vector<std::vector<int>> eve_delta;

  int num_states() const { return static_cast<int>(states.size()); }
  int find_state(const std::string& name) const;
  int find_label(const std::string& name) const;
  int max_priority() const;
  bool is_adam(int q) const { return states[static_cast<std::size_t>(q)].owner == Player::Adam; }
  // Throws SpecError if transitions are not total, deterministic and alternating.
  void validate() const;
};

// Input-driven-output automaton: Eve answers by outputting the content of a register.
struct IdoSpec {
  RegisterSet registers;
  std::vector<SpecState> states;
  int initial = 0;
  std::vector<std::vector<AdamMove>> adam_delta;
  // [eve state][register] -> Adam state.
  std::vector<std::vector<int>> output_delta;

  int num_states() const { return static_cast<int>(states.size()); }
  void validate() const;
};

class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& msg, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using SpecDocument = std::variant<OneSidedSpec, IdoSpec>;

SpecDocument parse_spec_document(const std::string& text);
OneSidedSpec parse_spec(const std::string& text);
IdoSpec parse_ido_spec(const std::string& text);

// Expands a guard expression into the set of test codes it accepts.
// Grammar: TOP | ELSE-free boolean combination (&, |, !, parentheses) of chains
// such as "rl < * < rM", "* = r", "* != r", "* <= r".
std::vector<std::uint32_t> expand_guard(const std::string& guard, const RegisterSet& regs);

// Renders the automaton back into the DSL; parse_spec(pretty_print(s)) has the same transitions.
std::string pretty_print(const OneSidedSpec& spec);
std::string pretty_print(const IdoSpec& spec);

// Canonical JSON dump with stable field order.
std::string dump_spec(const OneSidedSpec& spec);

std::string export_dot(const OneSidedSpec& spec);

// Escapes quotes and backslashes for DOT string literals.
std::string dot_escape(const std::string& s);

}  // namespace rs
