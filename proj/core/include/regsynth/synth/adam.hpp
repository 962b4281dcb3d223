#pragma once

#include "regsynth/constraints/zero.hpp"
#include "regsynth/game/product.hpp"
#include "regsynth/synth/assign.hpp"

#include <memory>
#include <optional>

namespace rs {

// Bound on the two-way chain depth of constraint words consistent with Adam's winning
// strategy: (vertices of the strategy-restricted graph) * (|R| + 2) + 1.
unsigned estimate_adam_bound(const ProductGame& game, const ParitySolution& solution);

// Executable Adam strategy: follows the winning strategy in the product and produces
// concrete data realizing the chosen tests. Over Q it picks midpoints of gaps (and
// one beyond the extremes); over N it runs a DataAssigner on the lifted constraints.
class AdamDataStrategy {
 public:
  AdamDataStrategy(std::shared_ptr<const ProductGame> game, std::shared_ptr<const ParitySolution> solution,
                   unsigned bound, DataAssigner::Insertion mode = DataAssigner::Insertion::Midpoint);

  struct Move {
    Value datum;
    Test test;
    Assignment asgn;
    int eve_vertex = -1;
  };
  // Datum for the current Adam vertex; throws std::logic_error if called twice
  // without observe, or std::runtime_error if the datum breaks the chosen test.
  Move next();
  // Eve's answer to the last datum.
  void observe(int label);

  int vertex() const { return vertex_; }
  const Valuation& valuation() const { return valuation_; }
  unsigned bound() const { return bound_; }
  bool in_winning_region() const;
  // Lifted constraints (R, r_d, r_0) and valuations used over N.
  const std::vector<Constraint>& lifted_history() const;
  const std::vector<Valuation>& lifted_valuations() const;

 private:
  std::shared_ptr<const ProductGame> game_;
  std::shared_ptr<const ParitySolution> solution_;
  unsigned bound_;
  int vertex_;
  int pending_ = -1;
  Valuation valuation_;
  std::optional<ZeroLifter> lifter_;
  std::optional<DataAssigner> assigner_;
};

}  // namespace rs
