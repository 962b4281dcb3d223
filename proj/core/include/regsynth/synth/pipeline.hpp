#pragma once

#include "regsynth/core/spec.hpp"
#include "regsynth/core/transducer.hpp"
#include "regsynth/game/product.hpp"
#include "regsynth/synth/adam.hpp"

#include <memory>
#include <optional>
#include <string>

namespace rs {

struct SynthesisResult {
  Domain domain = Domain::Nat;
  bool realizable = false;
  OneSidedSpec spec;  // the one-sided spec actually solved
  std::shared_ptr<const ProductGame> game;
  std::shared_ptr<const ParitySolution> solution;
  std::optional<RegisterTransducer> transducer;  // when realizable
  unsigned adam_bound = 0;                       // when not realizable
  double build_seconds = 0;
  double solve_seconds = 0;

  // Fresh Adam strategy; throws std::logic_error when the input is realizable.
  AdamDataStrategy adam_strategy(DataAssigner::Insertion mode = DataAssigner::Insertion::Midpoint) const;
  std::string summary() const;
};

SynthesisResult synthesize(const OneSidedSpec& spec, Domain domain, std::size_t max_vertices = 2'000'000);
SynthesisResult synthesize(const IdoSpec& spec, Domain domain, std::size_t max_vertices = 2'000'000);

}  // namespace rs
