#pragma once

#include "regsynth/core/model.hpp"

#include <string>
#include <vector>

namespace rs {

struct TransducerMove {
  Assignment asgn;
  int label = 0;
  int target = 0;
  // False when the test cannot occur from this state (its order is unrealizable);
  // such moves keep the state unchanged and emit the first label.
  bool live = true;
};

// Executable Eve implementation: reads data, tests and updates registers, emits labels.
struct RegisterTransducer {
  RegisterSet registers;
  std::vector<std::string> labels;
  // Human-readable state names (e.g. the automaton state they shadow).
  std::vector<std::string> state_names;
  int initial = 0;
  // [state][test code]
  std::vector<std::vector<TransducerMove>> step;

  int num_states() const { return static_cast<int>(step.size()); }
  // Throws std::invalid_argument when the tables are not total.
  void validate() const;
};

// Mutable run of a transducer from the all-zero valuation.
class TransducerRun {
 public:
  explicit TransducerRun(const RegisterTransducer& t);

  struct Output {
    Test test;
    Assignment asgn;
    int label;
    int state;  // state after the step
  };
  Output feed(const Value& datum);

  int state() const { return state_; }
  const Valuation& valuation() const { return valuation_; }

 private:
  const RegisterTransducer* t_;
  int state_;
  Valuation valuation_;
};

std::string dump_transducer(const RegisterTransducer& t);
// Inverse of dump_transducer; throws std::invalid_argument on malformed input.
RegisterTransducer load_transducer(const std::string& json_text);
// One edge per (state, test).
std::string export_dot(const RegisterTransducer& t);

}  // namespace rs
