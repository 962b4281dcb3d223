#pragma once

#include "regsynth/core/spec.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace rs {

// Feasibility arena of a one-sided spec. Adam vertices are the initial state and pairs
// (label, Adam state); Eve vertices are triples (test, assignment, Eve state). Only the
// part reachable from the initial vertex is built.
struct ArenaVertex {
  bool adam = true;
  int spec_state = 0;
  int label = -1;            // Adam vertices; -1 for the initial vertex
  std::uint32_t test = 0;    // Eve vertices
  Assignment asgn;           // Eve vertices
};

struct Arena {
  std::vector<ArenaVertex> vertices;
  // Adam vertices: one successor per test code, indexed by the code. Eve vertices: one
  // successor per label, indexed by the label.
  std::vector<std::vector<int>> succ;
  int initial = 0;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  std::size_t num_adam() const;
  std::size_t num_eve() const;
  std::size_t num_edges() const;
  std::string vertex_name(const OneSidedSpec& spec, int v) const;
};

Arena build_arena(const OneSidedSpec& spec);

}  // namespace rs
