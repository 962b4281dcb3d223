#include "regsynth/game/parity_game.hpp"

#include "regsynth/core/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rs {

std::size_t ParityGame::num_edges() const {
  std::size_t k = 0;
  for (const auto& s : succ) k += s.size();
  return k;
}

int ParityGame::max_priority() const {
  int m = 0;
  for (int p : priority) m = std::max(m, p);
  return m;
}

int ParityGame::add_vertex(Player p, int prio, std::string name) {
  owner.push_back(p);
  priority.push_back(prio);
  succ.emplace_back();
  names.push_back(std::move(name));
  return num_vertices() - 1;
}

void ParityGame::validate() const {
  const int n = num_vertices();
  if (static_cast<int>(priority.size()) != n || static_cast<int>(succ.size()) != n)
    throw std::invalid_argument("parity game: inconsistent sizes");
  if (n > 0 && (initial < 0 || initial >= n)) throw std::invalid_argument("parity game: bad initial vertex");
  for (int v = 0; v < n; ++v) {
    if (succ[static_cast<std::size_t>(v)].empty()) throw std::invalid_argument("parity game: dead end at " + std::to_string(v));
    if (priority[static_cast<std::size_t>(v)] < 0) throw std::invalid_argument("parity game: negative priority");
    for (int w : succ[static_cast<std::size_t>(v)])
      if (w < 0 || w >= n) throw std::invalid_argument("parity game: edge out of range");
  }
}

void compress_priorities(ParityGame& g) {
  std::vector<int> distinct = g.priority;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<int, int> remap;
  int cur = 0;
  for (int p : distinct) {
    // Smallest value above the previous one with the same parity as p (at least 1).
    int want = cur == 0 ? (p % 2 == 0 ? 2 : 1) : cur;
    if (cur != 0 && want % 2 != p % 2) ++want;
    remap[p] = want;
    cur = want;
  }
  for (auto& p : g.priority) p = remap[p];
}

std::size_t ParitySolution::region_size(Player p) const {
  return static_cast<std::size_t>(std::count(winner.begin(), winner.end(), p));
}

std::vector<bool> region_of(const ParitySolution& s, Player owner) {
  std::vector<bool> r(s.winner.size());
  for (std::size_t v = 0; v < r.size(); ++v) r[v] = s.winner[v] == owner;
  return r;
}

namespace {

bool good_for(Player p, int priority) { return (priority % 2 == 0) == (p == Player::Eve); }

// Every cycle of the graph reachable from the sources has a maximal priority good for p.
bool all_cycles_good(const std::vector<std::vector<int>>& adj, const std::vector<int>& priority,
                     const std::vector<int>& sources, Player p) {
  auto reach = reachable_from(adj, sources);
  const int n = static_cast<int>(adj.size());
  std::vector<int> levels(priority.begin(), priority.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (int bad : levels) {
    if (good_for(p, bad)) continue;
    // A cycle through a vertex of priority `bad` using only vertices of priority <= bad.
    std::vector<std::vector<int>> sub(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (!reach[static_cast<std::size_t>(v)] || priority[static_cast<std::size_t>(v)] > bad) continue;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (reach[static_cast<std::size_t>(w)] && priority[static_cast<std::size_t>(w)] <= bad)
          sub[static_cast<std::size_t>(v)].push_back(w);
    }
    int num = 0;
    auto comp = scc_ids(sub, &num);
    std::vector<int> size(static_cast<std::size_t>(num), 0);
    for (int v = 0; v < n; ++v) ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    for (int v = 0; v < n; ++v) {
      if (!reach[static_cast<std::size_t>(v)] || priority[static_cast<std::size_t>(v)] != bad) continue;
      bool cyc = size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] > 1;
      for (int w : sub[static_cast<std::size_t>(v)]) cyc = cyc || w == v;
      if (cyc) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> restricted_graph(const ParityGame& g, const std::vector<int>& strategy, Player owner) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.owner[static_cast<std::size_t>(v)] == owner) adj[static_cast<std::size_t>(v)] = {strategy[static_cast<std::size_t>(v)]};
    else adj[static_cast<std::size_t>(v)] = g.succ[static_cast<std::size_t>(v)];
  }
  return adj;
}

}  // namespace

bool verify_strategy(const ParityGame& g, const std::vector<int>& strategy, Player owner, const std::vector<bool>& region) {
  const int n = g.num_vertices();
  std::vector<int> sources;
  for (int v = 0; v < n; ++v) {
    if (!region[static_cast<std::size_t>(v)]) continue;
    sources.push_back(v);
    if (g.owner[static_cast<std::size_t>(v)] == owner) {
      int s = strategy[static_cast<std::size_t>(v)];
      const auto& out = g.succ[static_cast<std::size_t>(v)];
      if (std::find(out.begin(), out.end(), s) == out.end()) return false;
      if (!region[static_cast<std::size_t>(s)]) return false;
    } else {
      for (int w : g.succ[static_cast<std::size_t>(v)])
        if (!region[static_cast<std::size_t>(w)]) return false;
    }
  }
  std::vector<int> safe = strategy;
  for (int v = 0; v < n; ++v)
    if (g.owner[static_cast<std::size_t>(v)] == owner && !region[static_cast<std::size_t>(v)])
      safe[static_cast<std::size_t>(v)] = g.succ[static_cast<std::size_t>(v)][0];
  return all_cycles_good(restricted_graph(g, safe, owner), g.priority, sources, owner);
}

namespace {

// Vertices from which `p` wins with some positional strategy.
std::vector<bool> positional_region(const ParityGame& g, Player p, std::size_t max_profiles) {
  const int n = g.num_vertices();
  std::vector<int> mine;
  std::size_t profiles = 1;
  for (int v = 0; v < n; ++v)
    if (g.owner[static_cast<std::size_t>(v)] == p) {
      mine.push_back(v);
      profiles *= g.succ[static_cast<std::size_t>(v)].size();
      if (profiles > max_profiles) throw std::invalid_argument("brute_force_solve: too many strategies");
    }
  std::vector<bool> win(static_cast<std::size_t>(n), false);
  std::vector<std::size_t> choice(mine.size(), 0);
  std::vector<int> strategy(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < profiles; ++k) {
    for (std::size_t i = 0; i < mine.size(); ++i)
      strategy[static_cast<std::size_t>(mine[i])] = g.succ[static_cast<std::size_t>(mine[i])][choice[i]];
    auto adj = restricted_graph(g, strategy, p);
    for (int v = 0; v < n; ++v)
      if (!win[static_cast<std::size_t>(v)] && all_cycles_good(adj, g.priority, {v}, p)) win[static_cast<std::size_t>(v)] = true;
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (++choice[i] < g.succ[static_cast<std::size_t>(mine[i])].size()) break;
      choice[i] = 0;
    }
  }
  return win;
}

}  // namespace

std::vector<Player> brute_force_solve(const ParityGame& g, std::size_t max_profiles) {
  g.validate();
  auto eve = positional_region(g, Player::Eve, max_profiles);
  auto adam = positional_region(g, Player::Adam, max_profiles);
  std::vector<Player> out(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (eve[static_cast<std::size_t>(v)] == adam[static_cast<std::size_t>(v)])
      throw std::logic_error("brute_force_solve: regions do not partition the vertices");
    out[static_cast<std::size_t>(v)] = eve[static_cast<std::size_t>(v)] ? Player::Eve : Player::Adam;
  }
  return out;
}

ParityGame random_parity_game(int num_vertices, int max_priority, int max_out_degree, std::mt19937_64& rng) {
  ParityGame g;
  std::uniform_int_distribution<int> pick_v(0, num_vertices - 1);
  std::uniform_int_distribution<int> pick_p(1, std::max(1, max_priority));
  std::uniform_int_distribution<int> pick_d(1, std::max(1, max_out_degree));
  for (int v = 0; v < num_vertices; ++v)
    g.add_vertex(rng() % 2 ? Player::Eve : Player::Adam, pick_p(rng), "v" + std::to_string(v));
  for (int v = 0; v < num_vertices; ++v) {
    int d = pick_d(rng);
    auto& out = g.succ[static_cast<std::size_t>(v)];
    for (int i = 0; i < d; ++i) {
      int w = pick_v(rng);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return g;
}

std::string export_dot(const ParityGame& g) {
  std::ostringstream out;
  out << "digraph parity_game {\n  rankdir=LR;\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool adam = g.owner[static_cast<std::size_t>(v)] == Player::Adam;
    std::string name = v < static_cast<int>(g.names.size()) && !g.names[static_cast<std::size_t>(v)].empty()
                           ? g.names[static_cast<std::size_t>(v)]
                           : std::to_string(v);
    out << "  v" << v << " [shape=" << (adam ? "box" : "circle") << ", color=" << (adam ? "red" : "green")
        << ", class=\"" << (adam ? "adam" : "eve") << "\", label=\"" << dot_escape(name) << "\\np"
        << g.priority[static_cast<std::size_t>(v)] << "\"" << (v == g.initial ? ", peripheries=2" : "") << "];\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.succ[static_cast<std::size_t>(v)]) out << "  v" << v << " -> v" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string solve_report(const ParityGame& g, const ParitySolution& s, std::size_t max_rows) {
  std::ostringstream out;
  out << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << ", max priority " << g.max_priority() << "\n";
  out << "eve region " << s.region_size(Player::Eve) << ", adam region " << s.region_size(Player::Adam) << "\n";
  if (g.num_vertices() > 0) out << "winner at initial vertex: " << (s.eve_wins(g.initial) ? "eve" : "adam") << "\n";
  out << "strategy (vertex -> successor, for the winner's own vertices):\n";
  std::size_t rows = 0;
  for (int v = 0; v < g.num_vertices() && rows < max_rows; ++v) {
    if (g.owner[static_cast<std::size_t>(v)] != s.winner[static_cast<std::size_t>(v)]) continue;
    if (g.succ[static_cast<std::size_t>(v)].size() < 2) continue;
    auto nm = [&](int x) {
      return x < static_cast<int>(g.names.size()) && !g.names[static_cast<std::size_t>(x)].empty()
                 ? g.names[static_cast<std::size_t>(x)]
                 : std::to_string(x);
    };
    out << "  " << nm(v) << " -> " << nm(s.strategy[static_cast<std::size_t>(v)]) << "\n";
    ++rows;
  }
  return out.str();
}

}  // namespace rs
