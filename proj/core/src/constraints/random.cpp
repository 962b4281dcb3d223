#include "regsynth/constraints/random.hpp"

#include <stdexcept>

namespace rs {

RegisterSet default_registers(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("r" + std::to_string(i));
  return RegisterSet(names);
}

Order random_order(int m, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, std::max(0, m - 1));
  std::vector<int> keys(static_cast<std::size_t>(m));
  for (auto& k : keys) k = pick(rng);
  return Order::from_keys(keys);
}

Constraint random_constraint_between(const StateConstraint& start, const StateConstraint& end, Rng& rng) {
  const int n = start.size();
  if (end.size() != n) throw std::invalid_argument("random_constraint_between: size mismatch");
  const auto a = start.classes();
  const auto b = end.classes();
  std::vector<int> ranks(static_cast<std::size_t>(2 * n));
  std::size_t i = 0, j = 0;
  int level = 0;
  std::uniform_int_distribution<int> choice(0, 2);
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : (j == b.size() ? 0 : choice(rng));
    if (c == 0 || c == 2)
      for (int r : a[i]) ranks[static_cast<std::size_t>(r)] = level;
    if (c == 1 || c == 2)
      for (int r : b[j]) ranks[static_cast<std::size_t>(n + r)] = level;
    if (c == 0 || c == 2) ++i;
    if (c == 1 || c == 2) ++j;
    ++level;
  }
  return Constraint(n, Order(ranks));
}

Constraint random_constraint(const StateConstraint& start, Rng& rng) {
  return random_constraint_between(start, random_order(start.size(), rng), rng);
}

std::vector<Constraint> random_prefix(int n, std::size_t length, Rng& rng, bool zero_start) {
  std::vector<Constraint> out;
  StateConstraint cur = zero_start ? Order::all_equal(n) : random_order(n, rng);
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(random_constraint(cur, rng));
    cur = out.back().end();
  }
  return out;
}

LassoConstraintSeq random_lasso(int n, std::size_t prefix_length, std::size_t loop_length, Rng& rng,
                                bool zero_start) {
  if (loop_length == 0) throw std::invalid_argument("random_lasso: empty loop");
  LassoConstraintSeq seq;
  seq.registers = default_registers(n);
  seq.prefix = random_prefix(n, prefix_length, rng, zero_start);
  StateConstraint loop_head;
  if (!seq.prefix.empty()) loop_head = seq.prefix.back().end();
  else loop_head = zero_start ? Order::all_equal(n) : random_order(n, rng);
  StateConstraint cur = loop_head;
  for (std::size_t k = 0; k + 1 < loop_length; ++k) {
    seq.loop.push_back(random_constraint(cur, rng));
    cur = seq.loop.back().end();
  }
  seq.loop.push_back(random_constraint_between(cur, loop_head, rng));
  return seq;
}

std::vector<Constraint> random_valuation_prefix(int n, std::size_t length, long max_value, Rng& rng,
                                                bool zero_start) {
  std::uniform_int_distribution<long> pick(0, max_value);
  auto draw = [&] {
    Valuation v;
    for (int r = 0; r < n; ++r) v.emplace_back(pick(rng));
    return v;
  };
  Valuation cur = zero_start ? zero_valuation(n) : draw();
  std::vector<Constraint> out;
  for (std::size_t k = 0; k < length; ++k) {
    Valuation next = draw();
    out.push_back(constraint_of(cur, next));
    cur = next;
  }
  return out;
}

}  // namespace rs
