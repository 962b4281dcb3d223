#include "regsynth/constraints/zero.hpp"

#include "regsynth/constraints/chains.hpp"

#include <map>
#include <stdexcept>

namespace rs {

bool is_meaningful(const std::vector<Constraint>& prefix) { return prefix_verdict(prefix).zero_satisfiable(); }

ZeroLifter::ZeroLifter(int num_registers) : n_(num_registers), zero_(static_cast<std::size_t>(num_registers), true) {}

Constraint ZeroLifter::lift(const Constraint& c) {
  const int n = n_;
  if (c.num_registers() != n) throw std::invalid_argument("c0nv: register count mismatch");
  if (first_ && !c.start().all_equal()) throw std::invalid_argument("c0nv: first constraint is not all-equal");
  first_ = false;
  int zero_rank = -1;
  for (int r = 0; r < n; ++r)
    if (zero_[static_cast<std::size_t>(r)]) {
      int k = c.order().rank(r);
      if (zero_rank >= 0 && zero_rank != k) throw std::invalid_argument("c0nv: zero class split");
      zero_rank = k;
    }
  if (zero_rank >= 0)
    for (int e = 0; e < 2 * n; ++e)
      if (c.order().rank(e) < zero_rank) throw std::invalid_argument("c0nv: a value drops below zero");
  // Shift every class up by one slot so r_0 can sit alone at the bottom when no register holds 0.
  std::vector<int> ranks(static_cast<std::size_t>(2 * (n + 1)));
  for (int i = 0; i < n; ++i) {
    ranks[static_cast<std::size_t>(i)] = 2 * c.order().rank(i) + 2;
    ranks[static_cast<std::size_t>(n + 1 + i)] = 2 * c.order().rank(n + i) + 2;
  }
  const int zr = zero_rank >= 0 ? 2 * zero_rank + 2 : 0;
  ranks[static_cast<std::size_t>(n)] = zr;
  ranks[static_cast<std::size_t>(2 * n + 1)] = zr;
  std::vector<bool> next(static_cast<std::size_t>(n), false);
  for (int r = 0; r < n; ++r) next[static_cast<std::size_t>(r)] = zero_rank >= 0 && c.order().rank(n + r) == zero_rank;
  zero_ = next;
  return Constraint(n + 1, Order(ranks));
}

std::vector<Constraint> c0nv_add_zero_register(const std::vector<Constraint>& prefix) {
  if (!is_meaningful(prefix)) throw std::invalid_argument("c0nv: input is not meaningful");
  std::vector<Constraint> out;
  if (prefix.empty()) return out;
  ZeroLifter lifter(prefix[0].num_registers());
  for (const auto& c : prefix) out.push_back(lifter.lift(c));
  return out;
}

LassoConstraintSeq c0nv_add_zero_register(const LassoConstraintSeq& seq) {
  if (!seq.consistent()) throw std::invalid_argument("c0nv: input is not consistent");
  auto z = zero_start_checks(seq);
  if (!z.c0_all_equal || z.has_decrease_from_0) throw std::invalid_argument("c0nv: input is not meaningful");
  LassoConstraintSeq out;
  out.registers = seq.registers.with(kZeroRegister);
  ZeroLifter lifter(seq.num_registers());
  std::vector<Constraint> lifted;
  for (const auto& c : seq.prefix) lifted.push_back(lifter.lift(c));
  std::map<std::pair<std::size_t, std::vector<bool>>, std::size_t> seen;
  std::size_t k = 0;
  while (true) {
    auto key = std::make_pair(k, lifter.zero_class());
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.prefix.assign(lifted.begin(), lifted.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.loop.assign(lifted.begin() + static_cast<std::ptrdiff_t>(it->second), lifted.end());
      return out;
    }
    seen.emplace(key, lifted.size());
    lifted.push_back(lifter.lift(seq.loop[k]));
    k = (k + 1) % seq.loop.size();
  }
}

}  // namespace rs
