#pragma once

#include "regsynth/constraints/lasso.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rs {

// Square max-plus matrix; entry (i, j) is the weight added when counter j feeds counter i.
class MaxPlusMatrix {
 public:
  static constexpr std::int64_t kNeg = INT64_MIN / 4;

  explicit MaxPlusMatrix(int dim = 0);
  static MaxPlusMatrix identity(int dim);

  int dim() const { return dim_; }
  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
  void set(int i, int j, std::int64_t w) { a_[static_cast<std::size_t>(i * dim_ + j)] = w; }
  // Keeps the larger of the current entry and w.
  void raise(int i, int j, std::int64_t w);

  // (this * rhs): apply rhs first, then this.
  MaxPlusMatrix operator*(const MaxPlusMatrix& rhs) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;

 private:
  int dim_;
  std::vector<std::int64_t> a_;
};

// Coordinates i with unbounded values in the sequence M^k x for a finite x and
// nonnegative weights: those fed by a strongly connected component with a positive edge.
std::vector<bool> unbounded_coordinates(const MaxPlusMatrix& m);

// Deterministic counter automaton combining the consistency check, a global
// deepest-decreasing-chain counter per register, and |R| chain tracers, each with an
// idle counter plus one decreasing and one increasing counter per register.
class MaxPlusMonitor {
 public:
  struct State {
    bool started = false;
    bool inconsistent = false;
    Order order;                     // order of the registers at the current moment
    std::vector<int> tracer_level;   // class tracked by each tracer, -1 when idle
    bool operator==(const State&) const = default;
    bool operator<(const State& o) const;
  };

  explicit MaxPlusMonitor(int num_registers);

  int num_registers() const { return n_; }
  int num_tracers() const { return n_; }
  int num_counters() const;
  int constant_index() const { return 0; }
  int decreasing_index(int r) const { return 1 + r; }
  int idle_index(int t) const { return 1 + n_ + t * (1 + 2 * n_); }
  int down_index(int t, int r) const { return idle_index(t) + 1 + r; }
  int up_index(int t, int r) const { return idle_index(t) + 1 + n_ + r; }

  State initial() const;
  // Successor state and the counter update performed while reading c.
  std::pair<State, MaxPlusMatrix> step(const State& s, const Constraint& c) const;

  struct Verdict {
    bool consistent = false;
    bool decreasing_bounded = false;
    bool tracers_ok = false;
    std::vector<bool> unbounded;  // per counter
    std::size_t distinct_states = 0;
    bool accepts() const { return consistent && decreasing_bounded && tracers_ok; }
  };
  Verdict evaluate(const LassoConstraintSeq& seq) const;

  std::string counter_name(int index) const;

 private:
  int n_;
};

MaxPlusMonitor build_max_monitor(int num_registers);
bool eval_monitor_on_lasso(const MaxPlusMonitor& m, const LassoConstraintSeq& seq);

}  // namespace rs
