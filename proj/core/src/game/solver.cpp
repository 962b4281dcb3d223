#include "regsynth/game/solver.hpp"

#include <algorithm>

namespace rs {

namespace {

Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }

class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g) : g_(g) {
    const int n = g.num_vertices();
    pred_.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v)
      for (int w : g.succ[static_cast<std::size_t>(v)]) pred_[static_cast<std::size_t>(w)].push_back(v);
    sol_.winner.assign(static_cast<std::size_t>(n), Player::Adam);
    sol_.strategy.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) sol_.strategy[static_cast<std::size_t>(v)] = g.succ[static_cast<std::size_t>(v)][0];
  }

  ParitySolution run() {
    std::vector<bool> all(static_cast<std::size_t>(g_.num_vertices()), true);
    solve(all);
    return sol_;
  }

 private:
  const ParityGame& g_;
  std::vector<std::vector<int>> pred_;
  ParitySolution sol_;

  // Attractor of `target` for player p inside `sub`; sets p's strategy on added vertices.
  std::vector<bool> attractor(const std::vector<bool>& sub, const std::vector<bool>& target, Player p) {
    const int n = g_.num_vertices();
    std::vector<bool> attr = target;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
      if (!sub[static_cast<std::size_t>(v)]) continue;
      if (attr[static_cast<std::size_t>(v)]) queue.push_back(v);
      for (int w : g_.succ[static_cast<std::size_t>(v)]) count[static_cast<std::size_t>(v)] += sub[static_cast<std::size_t>(w)] ? 1 : 0;
    }
    while (!queue.empty()) {
      int w = queue.back();
      queue.pop_back();
      for (int v : pred_[static_cast<std::size_t>(w)]) {
        if (!sub[static_cast<std::size_t>(v)] || attr[static_cast<std::size_t>(v)]) continue;
        if (g_.owner[static_cast<std::size_t>(v)] == p) {
          attr[static_cast<std::size_t>(v)] = true;
          sol_.strategy[static_cast<std::size_t>(v)] = w;
          queue.push_back(v);
        } else if (--count[static_cast<std::size_t>(v)] == 0) {
          attr[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    return attr;
  }

  // Some successor of v inside sub.
  int stay_in(int v, const std::vector<bool>& sub) const {
    for (int w : g_.succ[static_cast<std::size_t>(v)])
      if (sub[static_cast<std::size_t>(w)]) return w;
    return g_.succ[static_cast<std::size_t>(v)][0];
  }

  void solve(const std::vector<bool>& sub) {
    const int n = g_.num_vertices();
    int top = -1;
    for (int v = 0; v < n; ++v)
      if (sub[static_cast<std::size_t>(v)]) top = std::max(top, g_.priority[static_cast<std::size_t>(v)]);
    if (top < 0) return;
    const Player x = top % 2 == 0 ? Player::Eve : Player::Adam;
    const Player y = opponent(x);
    std::vector<bool> heads(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
      heads[static_cast<std::size_t>(v)] = sub[static_cast<std::size_t>(v)] && g_.priority[static_cast<std::size_t>(v)] == top;
    auto attr = attractor(sub, heads, x);
    std::vector<bool> rest(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) rest[static_cast<std::size_t>(v)] = sub[static_cast<std::size_t>(v)] && !attr[static_cast<std::size_t>(v)];
    solve(rest);
    std::vector<bool> lost(static_cast<std::size_t>(n), false);
    bool any = false;
    for (int v = 0; v < n; ++v)
      if (rest[static_cast<std::size_t>(v)] && sol_.winner[static_cast<std::size_t>(v)] == y) {
        lost[static_cast<std::size_t>(v)] = true;
        any = true;
      }
    if (!any) {
      for (int v = 0; v < n; ++v) {
        if (!sub[static_cast<std::size_t>(v)]) continue;
        sol_.winner[static_cast<std::size_t>(v)] = x;
        if (heads[static_cast<std::size_t>(v)] && g_.owner[static_cast<std::size_t>(v)] == x)
          sol_.strategy[static_cast<std::size_t>(v)] = stay_in(v, sub);
      }
      return;
    }
    auto back = attractor(sub, lost, y);
    std::vector<bool> remaining(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
      if (!sub[static_cast<std::size_t>(v)]) continue;
      if (back[static_cast<std::size_t>(v)]) sol_.winner[static_cast<std::size_t>(v)] = y;
      else remaining[static_cast<std::size_t>(v)] = true;
    }
    solve(remaining);
  }
};

}  // namespace

ParitySolution solve_parity(const ParityGame& g) {
  g.validate();
  if (g.num_vertices() == 0) return {};
  return Zielonka(g).run();
}

}  // namespace rs
