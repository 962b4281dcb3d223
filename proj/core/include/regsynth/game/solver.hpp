#pragma once

#include "regsynth/game/parity_game.hpp"

namespace rs {

// Zielonka's recursive algorithm with positional strategy extraction for both players.
ParitySolution solve_parity(const ParityGame& g);

}  // namespace rs
