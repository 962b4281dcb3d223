#pragma once

#include "regsynth/core/spec.hpp"

namespace rs {

// One-sided spec equivalent to an input-driven-output spec. States pair a spec state
// with the equality partition of the registers; Eve's labels are the register names.
// Outputting r yields the datum held by r, so all registers of r's class behave like
// the lowest-index register of that class.
OneSidedSpec reduce_ido_to_one_sided(const IdoSpec& spec);

}  // namespace rs
