#pragma once

#include "regsynth/core/spec.hpp"
#include "regsynth/core/transducer.hpp"
#include "regsynth/synth/adam.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace rs {

// One round: Adam's datum and Eve's label.
struct TraceRow {
  std::size_t step = 0;
  Value datum;
  Test test;
  Assignment asgn;
  int label = 0;
  int eve_state = 0;  // spec state after the datum
  int state = 0;      // spec Adam state after the label
  int priority = 0;   // largest priority visited in the round
};

struct Trace {
  std::vector<TraceRow> rows;
  std::vector<Valuation> valuations;  // automaton registers, one per moment
  // Set when the transducer assigned differently from the automaton.
  bool assignment_mismatch = false;
};

using DataSource = std::function<Value(const Valuation& current, std::size_t step)>;
using LabelPolicy = std::function<int(int eve_state, std::size_t step)>;

// Cycles through the given data.
DataSource scripted_datasource(std::vector<Value> data);
// Uniform picks from the data in the valuation, their neighbours and fresh values.
DataSource random_datasource(Domain domain, std::uint64_t seed);

Trace simulate_transducer(const OneSidedSpec& spec, const RegisterTransducer& t, const DataSource& source,
                          std::size_t steps);
Trace simulate_adam(const OneSidedSpec& spec, AdamDataStrategy& adam, const LabelPolicy& eve, std::size_t steps);

// Tab-separated: step, data, test, asgn, label, state, priority.
std::string format_trace(const Trace& trace, const OneSidedSpec& spec);

// Largest priority over the second half of the trace.
int tail_priority(const Trace& trace);

enum class SinkKind { None, EveWins, AdamWins };

// Per spec state: EveWins when every state reachable from it has an even priority,
// AdamWins when every one has an odd priority.
std::vector<SinkKind> classify_sinks(const OneSidedSpec& spec);

}  // namespace rs
