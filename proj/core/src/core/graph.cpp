#include "regsynth/core/graph.hpp"

#include <algorithm>
#include <utility>

namespace rs {

std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj, int* num_components) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto vs = static_cast<std::size_t>(v);
      if (next == 0 && index[vs] == -1) {
        index[vs] = low[vs] = counter++;
        stack.push_back(v);
        on_stack[vs] = true;
      }
      if (next < adj[vs].size()) {
        int w = adj[vs][next++];
        const auto ws = static_cast<std::size_t>(w);
        if (index[ws] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[ws]) {
          low[vs] = std::min(low[vs], index[ws]);
        }
        continue;
      }
      if (low[vs] == index[vs]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        auto ps = static_cast<std::size_t>(call.back().first);
        low[ps] = std::min(low[ps], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  if (num_components) *num_components = ncomp;
  return comp;
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> work;
  for (int s : sources)
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      work.push_back(s);
    }
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        work.push_back(w);
      }
  }
  return seen;
}

}  // namespace rs
