#pragma once

#include <vector>

namespace rs {

// Strongly connected components (Tarjan, iterative). Returns the component id of
// every vertex; ids are in reverse topological order of the condensation.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj, int* num_components = nullptr);

// Vertices reachable from the marked sources.
std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources);

}  // namespace rs
