#include "regsynth/synth/assign.hpp"

#include "regsynth/constraints/constr.hpp"
#include "regsynth/constraints/prefix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rs {

DataAssigner::DataAssigner(int num_registers, int zero_register, unsigned bound, Insertion mode)
    : n_(num_registers), zero_(zero_register), bound_(bound), mode_(mode), current_(zero_valuation(num_registers)) {
  if (zero_register < 0 || zero_register >= num_registers) throw std::invalid_argument("assigner: bad zero register");
  valuations_.push_back(current_);
}

Valuation DataAssigner::next(const Constraint& c) const {
  const int n = n_;
  if (c.num_registers() != n) throw std::invalid_argument("assigner: register count mismatch");
  if (!(Order::from_keys(current_) == c.start()))
    throw std::invalid_argument("assigner: constraint does not start in the current order");
  if (c.cmp(zero_, n + zero_) != 0) throw std::invalid_argument("assigner: zero register changes");
  Valuation out(static_cast<std::size_t>(n));
  int new_levels = 0;
  for (const auto& cls : c.end().classes()) {
    const int y = cls.front();
    std::optional<Value> copy, above, below;
    for (int x = 0; x < n; ++x) {
      const Value& vx = current_[static_cast<std::size_t>(x)];
      int rel = c.cmp(x, n + y);
      if (rel == 0) copy = vx;
      else if (rel > 0 && (!above || vx < *above)) above = vx;
      else if (rel < 0 && (!below || vx > *below)) below = vx;
    }
    Value v;
    if (copy) {
      v = *copy;
    } else {
      if (++new_levels > 1) throw std::invalid_argument("assigner: more than one new level");
      if (!below) throw std::invalid_argument("assigner: new level below zero");
      if (!above) {
        v = *std::max_element(current_.begin(), current_.end()) + Value(pow2(bound_));
      } else if (mode_ == Insertion::Midpoint) {
        BigInt sum = numerator(*above) + numerator(*below);
        v = Value(sum / 2);  // both operands are nonnegative integers, so this floors
      } else {
        v = *below + 1;
      }
    }
    for (int r : cls) out[static_cast<std::size_t>(r)] = v;
  }
  return out;
}

const Valuation& DataAssigner::advance(const Constraint& c) {
  current_ = next(c);
  history_.push_back(c);
  valuations_.push_back(current_);
  return current_;
}

InvariantReport verify_assignment_invariant(const std::vector<Constraint>& prefix,
                                            const std::vector<Valuation>& valuations, unsigned bound) {
  InvariantReport rep;
  if (valuations.size() != prefix.size() + 1) throw std::invalid_argument("invariant: need one valuation per moment");
  auto fail = [&](std::size_t m) {
    if (rep.ok()) rep.first_failure = m;
  };
  for (std::size_t m = 0; m < valuations.size(); ++m)
    for (const auto& x : valuations[m])
      if (x < 0 || denominator(x) != 1) {
        fail(m);
        rep.nonnegative = false;
      }
  for (std::size_t m = 0; m < prefix.size(); ++m)
    if (!satisfies(valuations[m], valuations[m + 1], prefix[m])) {
      fail(m + 1);
      rep.constraints_satisfied = false;
    }
  if (!rep.constraints_satisfied) return rep;
  for (std::size_t m = 1; m <= prefix.size(); ++m) {
    std::vector<Constraint> head(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(m));
    auto d = connecting_depths(head);
    const auto& v = valuations[m];
    const int n = static_cast<int>(v.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!(v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)])) continue;
        const int dxy = d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        ++rep.checked_pairs;
        if (dxy < 0 || static_cast<unsigned>(dxy) > bound) continue;
        Value gap = v[static_cast<std::size_t>(x)] - v[static_cast<std::size_t>(y)];
        if (gap < Value(pow2(bound - static_cast<unsigned>(dxy)))) {
          fail(m);
          rep.spacing_holds = false;
        }
      }
  }
  return rep;
}

namespace {

// Constraint that keeps every register except mover, which lands on target.
Constraint move_register(const Valuation& v, int mover, const Value& target) {
  const int n = static_cast<int>(v.size());
  std::vector<Value> keys(v.begin(), v.end());
  keys.insert(keys.end(), v.begin(), v.end());
  keys[static_cast<std::size_t>(n + mover)] = target;
  return Constraint(n, Order::from_keys(keys));
}

// Smallest (v(x) - v(y)) / 2^(B - d_xy) over ordered pairs at the last moment.
Value min_slack(const std::vector<Constraint>& prefix, const Valuation& v, unsigned bound) {
  auto d = connecting_depths(prefix);
  std::optional<Value> best;
  const int n = static_cast<int>(v.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!(v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)])) continue;
      int dxy = std::min<int>(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], static_cast<int>(bound));
      Value s = (v[static_cast<std::size_t>(x)] - v[static_cast<std::size_t>(y)]) /
                Value(pow2(bound - static_cast<unsigned>(std::max(dxy, 0))));
      if (!best || s < *best) best = s;
    }
  return best.value_or(Value(pow2(bound)));
}

}  // namespace

AdversaryOutcome run_tightness_adversary(DataAssigner assigner, std::size_t max_steps) {
  AdversaryOutcome out;
  out.played = assigner.history();
  out.valuations = assigner.valuations();
  const int n = assigner.num_registers();
  const int zero = assigner.zero_register();
  const unsigned bound = assigner.bound();
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Valuation& v = assigner.current();
    std::vector<Constraint> candidates;
    const Value top = *std::max_element(v.begin(), v.end());
    std::vector<Value> levels(v.begin(), v.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (int z = 0; z < n; ++z) {
      if (z == zero) continue;
      for (std::size_t k = 0; k + 1 < levels.size(); ++k)
        candidates.push_back(move_register(v, z, (levels[k] + levels[k + 1]) / 2));
      candidates.push_back(move_register(v, z, top + 1));
    }
    std::optional<Constraint> chosen;
    std::optional<Value> chosen_slack;
    bool defeats = false;
    for (const auto& c : candidates) {
      if (!satisfies_single_new_level(c)) continue;
      auto trial = out.played;
      trial.push_back(c);
      if (max_r2w_depth(trial) > static_cast<int>(bound)) continue;
      Valuation w;
      try {
        w = assigner.next(c);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!satisfies(v, w, c)) {
        chosen = c;
        defeats = true;
        break;
      }
      Value s = min_slack(trial, w, bound);
      if (!chosen_slack || s < *chosen_slack) {
        chosen = c;
        chosen_slack = s;
      }
    }
    if (!chosen) break;
    if (defeats) {
      out.valuations.push_back(assigner.next(*chosen));
      out.played.push_back(*chosen);
      out.defeated_at = out.played.size() - 1;
      break;
    }
    assigner.advance(*chosen);
    out.played.push_back(*chosen);
    out.valuations.push_back(assigner.current());
  }
  out.max_depth = max_r2w_depth(out.played);
  return out;
}

}  // namespace rs
