#include "regsynth/synth/simulate.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace rs {

DataSource scripted_datasource(std::vector<Value> data) {
  if (data.empty()) throw std::invalid_argument("scripted data: empty");
  return [data = std::move(data)](const Valuation&, std::size_t step) { return data[step % data.size()]; };
}

DataSource random_datasource(Domain domain, std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [domain, rng](const Valuation& v, std::size_t) {
    std::vector<Value> levels(v.begin(), v.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Value> pool = levels;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      pool.push_back(levels[k] + 1);
      pool.push_back(levels[k] - 1);
      if (k + 1 < levels.size()) pool.push_back(domain == Domain::Rat ? (levels[k] + levels[k + 1]) / 2
                                                                      : Value(numerator(Value(levels[k] + levels[k + 1])) / 2));
    }
    pool.push_back(levels.empty() ? Value(0) : levels.back() + 3);
    pool.erase(std::remove_if(pool.begin(), pool.end(), [&](const Value& x) { return !in_domain(x, domain); }),
               pool.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(*rng)];
  };
}

namespace {

int priority_of(const OneSidedSpec& spec, int q) { return spec.states[static_cast<std::size_t>(q)].priority; }

}  // namespace

Trace simulate_transducer(const OneSidedSpec& spec, const RegisterTransducer& t, const DataSource& source,
                          std::size_t steps) {
  Trace trace;
  TransducerRun run(t);
  Valuation val = zero_valuation(spec.registers.size());
  trace.valuations.push_back(val);
  int q = spec.initial;
  for (std::size_t step = 0; step < steps; ++step) {
    TraceRow row;
    row.step = step;
    row.datum = source(val, step);
    row.test = test_of(val, row.datum);
    const AdamMove& mv = spec.adam_delta[static_cast<std::size_t>(q)][row.test.code()];
    auto out = run.feed(row.datum);
    if (!(out.asgn == mv.asgn)) trace.assignment_mismatch = true;
    row.asgn = mv.asgn;
    val = update_valuation(val, row.datum, mv.asgn);
    if (run.valuation() != val) trace.assignment_mismatch = true;
    row.eve_state = mv.target;
    row.label = out.label;
    row.state = spec.eve_delta[static_cast<std::size_t>(mv.target)][static_cast<std::size_t>(out.label)];
    row.priority = std::max(priority_of(spec, row.eve_state), priority_of(spec, row.state));
    q = row.state;
    trace.rows.push_back(row);
    trace.valuations.push_back(val);
  }
  return trace;
}

Trace simulate_adam(const OneSidedSpec& spec, AdamDataStrategy& adam, const LabelPolicy& eve, std::size_t steps) {
  Trace trace;
  Valuation val = zero_valuation(spec.registers.size());
  trace.valuations.push_back(val);
  int q = spec.initial;
  for (std::size_t step = 0; step < steps; ++step) {
    auto mv = adam.next();
    TraceRow row;
    row.step = step;
    row.datum = mv.datum;
    row.test = test_of(val, row.datum);
    if (!(row.test == mv.test)) throw std::logic_error("simulate: Adam's datum does not match its test");
    const AdamMove& sm = spec.adam_delta[static_cast<std::size_t>(q)][row.test.code()];
    row.asgn = sm.asgn;
    val = update_valuation(val, row.datum, sm.asgn);
    row.eve_state = sm.target;
    row.label = eve(sm.target, step);
    adam.observe(row.label);
    row.state = spec.eve_delta[static_cast<std::size_t>(sm.target)][static_cast<std::size_t>(row.label)];
    row.priority = std::max(priority_of(spec, row.eve_state), priority_of(spec, row.state));
    q = row.state;
    trace.rows.push_back(row);
    trace.valuations.push_back(val);
  }
  return trace;
}

std::string format_trace(const Trace& trace, const OneSidedSpec& spec) {
  std::ostringstream out;
  out << "step\tdata\ttest\tasgn\tlabel\tstate\tpriority\n";
  for (const auto& r : trace.rows)
    out << r.step << '\t' << to_string(r.datum) << '\t' << format_test(r.test, spec.registers) << '\t'
        << format_assignment(r.asgn, spec.registers) << '\t' << spec.labels[static_cast<std::size_t>(r.label)] << '\t'
        << spec.states[static_cast<std::size_t>(r.state)].name << '\t' << r.priority << '\n';
  return out.str();
}

int tail_priority(const Trace& trace) {
  int best = 0;
  for (std::size_t k = trace.rows.size() / 2; k < trace.rows.size(); ++k) best = std::max(best, trace.rows[k].priority);
  return best;
}

std::vector<SinkKind> classify_sinks(const OneSidedSpec& spec) {
  const int n = spec.num_states();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    if (spec.is_adam(q))
      for (const auto& mv : spec.adam_delta[static_cast<std::size_t>(q)]) succ[static_cast<std::size_t>(q)].push_back(mv.target);
    else
      succ[static_cast<std::size_t>(q)] = spec.eve_delta[static_cast<std::size_t>(q)];
  }
  std::vector<SinkKind> out(static_cast<std::size_t>(n), SinkKind::None);
  for (int q = 0; q < n; ++q) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> work{q};
    seen[static_cast<std::size_t>(q)] = true;
    bool even = true, odd = true;
    while (!work.empty()) {
      const int p = work.back();
      work.pop_back();
      (priority_of(spec, p) % 2 == 0 ? odd : even) = false;
      for (int t : succ[static_cast<std::size_t>(p)])
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          work.push_back(t);
        }
    }
    out[static_cast<std::size_t>(q)] = even ? SinkKind::EveWins : (odd ? SinkKind::AdamWins : SinkKind::None);
  }
  return out;
}

}  // namespace rs
