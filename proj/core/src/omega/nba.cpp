#include "regsynth/omega/nba.hpp"

#include "regsynth/core/graph.hpp"

#include <stdexcept>

namespace rs {

LassoWord lasso_word(const LassoConstraintSeq& seq) { return LassoWord{seq.prefix, seq.loop}; }

Nba::StateSet Nba::post(StateSet from, const Constraint& letter) const {
  StateSet out = 0;
  for (int q = 0; q < num_states; ++q)
    if ((from >> q) & 1U) out |= successors(q, letter);
  return out;
}

Nba nba_union(const std::vector<Nba>& parts) {
  Nba out;
  std::vector<int> offset;
  for (const auto& p : parts) {
    if (!parts.empty() && p.num_registers != parts[0].num_registers)
      throw std::invalid_argument("nba_union: register count mismatch");
    offset.push_back(out.num_states);
    out.num_states += p.num_states;
  }
  if (out.num_states > Nba::kMaxStates) throw std::invalid_argument("nba_union: more than 64 states");
  out.num_registers = parts.empty() ? 0 : parts[0].num_registers;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.initial |= parts[i].initial << offset[i];
    out.accepting |= parts[i].accepting << offset[i];
    for (int q = 0; q < parts[i].num_states; ++q)
      out.state_names.push_back(q < static_cast<int>(parts[i].state_names.size())
                                    ? parts[i].state_names[static_cast<std::size_t>(q)]
                                    : std::to_string(i) + ":" + std::to_string(q));
  }
  out.successors = [parts, offset](int q, const Constraint& letter) -> Nba::StateSet {
    std::size_t i = parts.size() - 1;
    while (offset[i] > q) --i;
    return parts[i].successors(q - offset[i], letter) << offset[i];
  };
  return out;
}

bool nba_lasso_member(const Nba& a, const LassoWord& w) {
  if (w.loop.empty()) throw std::invalid_argument("nba_lasso_member: empty loop");
  const int u = static_cast<int>(w.prefix.size());
  const int len = u + static_cast<int>(w.loop.size());
  auto letter = [&](int pos) -> const Constraint& {
    return pos < u ? w.prefix[static_cast<std::size_t>(pos)] : w.loop[static_cast<std::size_t>(pos - u)];
  };
  auto id = [&](int q, int pos) { return pos * a.num_states + q; };
  const int total = len * a.num_states;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<int> work;
  for (int q = 0; q < a.num_states; ++q)
    if ((a.initial >> q) & 1U) {
      seen[static_cast<std::size_t>(id(q, 0))] = true;
      work.push_back(id(q, 0));
    }
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    int q = v % a.num_states, pos = v / a.num_states;
    int next_pos = pos + 1 < len ? pos + 1 : u;
    Nba::StateSet succ = a.successors(q, letter(pos));
    for (int p = 0; p < a.num_states; ++p)
      if ((succ >> p) & 1U) {
        int t = id(p, next_pos);
        adj[static_cast<std::size_t>(v)].push_back(t);
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          work.push_back(t);
        }
      }
  }
  int num = 0;
  auto comp = scc_ids(adj, &num);
  std::vector<int> size(static_cast<std::size_t>(num), 0);
  for (int v = 0; v < total; ++v) ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  for (int v = 0; v < total; ++v) {
    if (!seen[static_cast<std::size_t>(v)] || !a.is_accepting(v % a.num_states)) continue;
    int c = comp[static_cast<std::size_t>(v)];
    if (size[static_cast<std::size_t>(c)] > 1) return true;
    for (int t : adj[static_cast<std::size_t>(v)])
      if (t == v) return true;
  }
  return false;
}

}  // namespace rs
