#include "regsynth/omega/safra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rs {

namespace {

struct Node {
  int name = 0;        // old name, or kFresh + creation index for nodes created this step
  std::uint64_t label = 0;
  std::vector<int> kids;
  bool alive = true;
};

constexpr int kFresh = 1 << 20;

// Preorder encoding: name, label, number of children.
std::vector<Node> decode(const LazyDpa::Key& key) {
  std::vector<Node> nodes;
  std::size_t pos = 0;
  std::function<int()> read = [&]() -> int {
    Node nd;
    nd.name = static_cast<int>(key[pos++]);
    nd.label = static_cast<std::uint64_t>(key[pos++]);
    int kids = static_cast<int>(key[pos++]);
    int id = static_cast<int>(nodes.size());
    nodes.push_back(nd);
    for (int i = 0; i < kids; ++i) {
      int c = read();
      nodes[static_cast<std::size_t>(id)].kids.push_back(c);
    }
    return id;
  };
  if (!key.empty()) read();
  return nodes;
}

}  // namespace

SafraDpa::SafraDpa(Nba nba) : LazyDpa(nba.num_registers), nba_(std::move(nba)) {
  Key init;
  if (nba_.initial != 0) init = {1, static_cast<std::int64_t>(nba_.initial), 0};
  set_initial(init);
}

std::pair<LazyDpa::Key, int> SafraDpa::compute(const Key& from, const Constraint& letter) const {
  const int big = 2 * nba_.num_states + 2;  // min-parity to max-parity flip
  std::vector<Node> nodes = decode(from);
  if (nodes.empty()) return {Key{}, big - (2 * nba_.num_states + 1)};
  const std::size_t old_count = nodes.size();
  // Successor labels, then a new youngest child for the accepting states of every old node.
  for (auto& nd : nodes) nd.label = nba_.post(nd.label, letter);
  int fresh = 0;
  for (std::size_t i = 0; i < old_count; ++i) {
    std::uint64_t acc = nodes[i].label & nba_.accepting;
    if (acc == 0) continue;
    Node child;
    child.name = kFresh + fresh++;
    child.label = acc;
    nodes.push_back(child);
    nodes[i].kids.push_back(static_cast<int>(nodes.size() - 1));
  }
  // A state stays only in the oldest branch containing it.
  std::function<void(int, std::uint64_t)> restrict_to = [&](int v, std::uint64_t allowed) {
    auto& nd = nodes[static_cast<std::size_t>(v)];
    nd.label &= allowed;
    std::uint64_t seen = 0;
    for (int c : nd.kids) {
      restrict_to(c, nodes[static_cast<std::size_t>(v)].label & ~seen);
      seen |= nodes[static_cast<std::size_t>(c)].label;
    }
  };
  restrict_to(0, ~std::uint64_t{0});
  int removed = INT32_MAX;
  int marked = INT32_MAX;
  std::function<void(int)> kill = [&](int v) {
    auto& nd = nodes[static_cast<std::size_t>(v)];
    if (nd.alive && nd.name < kFresh) removed = std::min(removed, nd.name);
    nd.alive = false;
    for (int c : nd.kids) kill(c);
  };
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].alive && nodes[v].label == 0) kill(static_cast<int>(v));
  // Vertical merge, top-down: a node covered by its children absorbs them and is marked.
  std::function<void(int)> merge = [&](int v) {
    auto& nd = nodes[static_cast<std::size_t>(v)];
    if (!nd.alive) return;
    std::uint64_t covered = 0;
    bool any = false;
    for (int c : nd.kids)
      if (nodes[static_cast<std::size_t>(c)].alive) {
        covered |= nodes[static_cast<std::size_t>(c)].label;
        any = true;
      }
    if (any && covered == nodes[static_cast<std::size_t>(v)].label) {
      for (int c : nodes[static_cast<std::size_t>(v)].kids) kill(c);
      marked = std::min(marked, nodes[static_cast<std::size_t>(v)].name);
      return;
    }
    for (int c : nodes[static_cast<std::size_t>(v)].kids) merge(c);
  };
  merge(0);
  int min_priority;
  if (marked < removed) min_priority = 2 * marked;
  else if (removed != INT32_MAX) min_priority = 2 * removed - 1;
  else min_priority = 2 * nba_.num_states + 1;
  // Compact names: survivors keep their relative order, fresh nodes come after old ones.
  std::vector<int> names;
  for (const auto& nd : nodes)
    if (nd.alive) names.push_back(nd.name);
  std::sort(names.begin(), names.end());
  auto rename = [&](int name) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), name) - names.begin()) + 1;
  };
  Key out;
  std::function<void(int)> encode = [&](int v) {
    const auto& nd = nodes[static_cast<std::size_t>(v)];
    out.push_back(rename(nd.name));
    out.push_back(static_cast<std::int64_t>(nd.label));
    std::int64_t live = 0;
    for (int c : nd.kids) live += nodes[static_cast<std::size_t>(c)].alive ? 1 : 0;
    out.push_back(live);
    for (int c : nd.kids)
      if (nodes[static_cast<std::size_t>(c)].alive) encode(c);
  };
  if (nodes[0].alive) encode(0);
  return {out, big - min_priority};
}

std::string SafraDpa::state_label(int state) const {
  Key k = key(state);
  if (k.empty()) return "empty";
  std::ostringstream out;
  std::size_t pos = 0;
  std::function<void()> show = [&]() {
    int name = static_cast<int>(k[pos++]);
    auto label = static_cast<std::uint64_t>(k[pos++]);
    int kids = static_cast<int>(k[pos++]);
    out << name << "{";
    bool first = true;
    for (int q = 0; q < nba_.num_states; ++q)
      if ((label >> q) & 1U) {
        out << (first ? "" : ",") << q;
        first = false;
      }
    out << "}";
    if (kids > 0) {
      out << "(";
      for (int i = 0; i < kids; ++i) {
        if (i) out << " ";
        show();
      }
      out << ")";
    }
  };
  show();
  return out.str();
}

DpaPtr determinize(const Nba& a) { return std::make_shared<SafraDpa>(a); }

}  // namespace rs
