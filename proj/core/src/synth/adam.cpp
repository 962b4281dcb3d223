#include "regsynth/synth/adam.hpp"

#include "regsynth/constraints/constr.hpp"

#include <deque>
#include <stdexcept>

namespace rs {

unsigned estimate_adam_bound(const ProductGame& game, const ParitySolution& solution) {
  const auto& g = game.game;
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::deque<int> work{g.initial};
  seen[static_cast<std::size_t>(g.initial)] = true;
  std::size_t count = 0;
  while (!work.empty()) {
    const int v = work.front();
    work.pop_front();
    ++count;
    auto visit = [&](int w) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        work.push_back(w);
      }
    };
    if (g.owner[static_cast<std::size_t>(v)] == Player::Adam) visit(solution.strategy[static_cast<std::size_t>(v)]);
    else
      for (int w : g.succ[static_cast<std::size_t>(v)]) visit(w);
  }
  // |R_d| + 1 registers once r_0 is added.
  const std::size_t width = game.refs.empty() ? 2 : static_cast<std::size_t>(game.refs[0].pi.size()) + 1;
  const std::size_t b = count * width + 1;
  if (b > 1'000'000) throw std::length_error("adam bound too large");
  return static_cast<unsigned>(b);
}

AdamDataStrategy::AdamDataStrategy(std::shared_ptr<const ProductGame> game,
                                   std::shared_ptr<const ParitySolution> solution, unsigned bound,
                                   DataAssigner::Insertion mode)
    : game_(std::move(game)), solution_(std::move(solution)), bound_(bound), vertex_(game_->game.initial) {
  const int data_regs = game_->refs[static_cast<std::size_t>(vertex_)].pi.size();  // R plus r_d
  valuation_ = zero_valuation(data_regs - 1);
  if (game_->domain == Domain::Nat) {
    lifter_.emplace(data_regs);
    assigner_.emplace(data_regs + 1, data_regs, bound, mode);
  }
}

bool AdamDataStrategy::in_winning_region() const { return !solution_->eve_wins(vertex_); }

AdamDataStrategy::Move AdamDataStrategy::next() {
  if (pending_ >= 0) throw std::logic_error("adam: waiting for Eve's label");
  const auto& ref = game_->refs[static_cast<std::size_t>(vertex_)];
  const int e = solution_->strategy[static_cast<std::size_t>(vertex_)];
  const auto& eref = game_->refs[static_cast<std::size_t>(e)];
  if (eref.sink) throw std::runtime_error("adam: strategy enters the inconsistency sink");
  const auto& av = game_->arena.vertices[static_cast<std::size_t>(eref.arena_vertex)];
  const int n = static_cast<int>(valuation_.size());
  Move mv;
  mv.test = Test::decode(av.test, n);
  mv.asgn = av.asgn;
  mv.eve_vertex = e;
  if (game_->domain == Domain::Rat) {
    std::optional<Value> equal, lower, upper;
    for (int r = 0; r < n; ++r) {
      const Value& x = valuation_[static_cast<std::size_t>(r)];
      switch (mv.test.rel[static_cast<std::size_t>(r)]) {
        case Rel::Equal: equal = x; break;
        case Rel::Above:
          if (!lower || x > *lower) lower = x;
          break;
        case Rel::Below:
          if (!upper || x < *upper) upper = x;
          break;
      }
    }
    if (equal) mv.datum = *equal;
    else if (lower && upper) mv.datum = (*lower + *upper) / 2;
    else if (lower) mv.datum = *lower + 1;
    else if (upper) mv.datum = *upper - 1;
    else mv.datum = 0;
  } else {
    auto c = constr(ref.pi, mv.test, mv.asgn);
    if (!c) throw std::runtime_error("adam: strategy picks an order-inconsistent test");
    const Valuation& w = assigner_->advance(lifter_->lift(*c));
    mv.datum = w[static_cast<std::size_t>(n)];
  }
  if (!test_holds(valuation_, mv.datum, mv.test)) throw std::runtime_error("adam: datum does not realize the test");
  valuation_ = update_valuation(valuation_, mv.datum, mv.asgn);
  if (assigner_)
    for (int r = 0; r < n; ++r)
      if (assigner_->current()[static_cast<std::size_t>(r)] != valuation_[static_cast<std::size_t>(r)])
        throw std::runtime_error("adam: register values diverge from the assigner");
  pending_ = e;
  return mv;
}

void AdamDataStrategy::observe(int label) {
  if (pending_ < 0) throw std::logic_error("adam: no datum pending");
  vertex_ = game_->eve_successor(pending_, label);
  pending_ = -1;
}

const std::vector<Constraint>& AdamDataStrategy::lifted_history() const {
  static const std::vector<Constraint> empty;
  return assigner_ ? assigner_->history() : empty;
}

const std::vector<Valuation>& AdamDataStrategy::lifted_valuations() const {
  static const std::vector<Valuation> empty;
  return assigner_ ? assigner_->valuations() : empty;
}

}  // namespace rs
