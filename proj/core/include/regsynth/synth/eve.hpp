#pragma once

#include "regsynth/core/transducer.hpp"
#include "regsynth/game/product.hpp"

#include <stdexcept>

namespace rs {

class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Register transducer whose states are the Adam vertices of the product reachable from
// the initial vertex when Eve follows her winning strategy. On a test it takes Adam's
// edge, then answers with the label the strategy picks (the lowest such label).
// Throws NotRealizable when Adam wins the initial vertex.
RegisterTransducer extract_eve_transducer(const OneSidedSpec& spec, const ProductGame& game,
                                          const ParitySolution& solution);

}  // namespace rs
