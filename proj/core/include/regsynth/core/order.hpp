#pragma once

#include "regsynth/core/model.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rs {

// A total preorder (ordered partition) over elements 0..m-1, stored as dense ranks.
class Order {
 public:
  Order() = default;
  explicit Order(const std::vector<int>& ranks);

  static Order all_equal(int m);
  template <class Key>
  static Order from_keys(const std::vector<Key>& keys) {
    std::vector<int> ranks(keys.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = 0; j < keys.size(); ++j)
        if (keys[j] < keys[i]) ++ranks[i];
    return Order(ranks);
  }

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }
  int num_classes() const;
  // -1, 0, 1 as element i is below, equal to, above element j.
  int cmp(int i, int j) const {
    int a = rank(i), b = rank(j);
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  bool all_equal() const { return num_classes() <= 1; }
  // Classes in ascending order.
  std::vector<std::vector<int>> classes() const;
  // Order induced on the listed elements (renumbered 0..k-1 in list order).
  Order restrict(const std::vector<int>& elements) const;
  const std::vector<std::int8_t>& ranks() const { return rank_; }

  bool operator==(const Order&) const = default;
  bool operator<(const Order& o) const { return rank_ < o.rank_; }

 private:
  std::vector<std::int8_t> rank_;
};

// All ordered partitions of m elements (Fubini many); intended for m <= 6.
std::vector<Order> all_orders(int m);

using StateConstraint = Order;

// Constraint over n registers: element i is r_i, element n+i is r_i'.
class Constraint {
 public:
  Constraint() = default;
  Constraint(int n, Order order);

  int num_registers() const { return n_; }
  const Order& order() const { return order_; }
  static int cur(int i) { return i; }
  int next(int i) const { return n_ + i; }
  int cmp(int a, int b) const { return order_.cmp(a, b); }

  // Relative order of registers at the start / end of the step.
  StateConstraint start() const;
  StateConstraint end() const;

  // Identity step over the given start order.
  static Constraint identity(const StateConstraint& s);

  bool operator==(const Constraint&) const = default;
  bool operator<(const Constraint& o) const { return order_ < o.order_; }

 private:
  int n_ = 0;
  Order order_;
};

// "{a,b'} < {c} < ..." in ascending order.
std::string format_constraint(const Constraint& c, const RegisterSet& regs);
std::string format_state_constraint(const StateConstraint& s, const RegisterSet& regs);
// Parses the format above; '>' chains are accepted too (descending).
// Throws std::invalid_argument on malformed input.
Constraint parse_constraint(const std::string& text, const RegisterSet& regs);

// Constraint from two valuations (start and end of a step).
Constraint constraint_of(const Valuation& before, const Valuation& after);
bool satisfies(const Valuation& before, const Valuation& after, const Constraint& c);

bool adjacent_consistent(const Constraint& c1, const Constraint& c2);

}  // namespace rs

template <>
struct std::hash<rs::Order> {
  std::size_t operator()(const rs::Order& o) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto r : o.ranks()) h = (h ^ static_cast<std::size_t>(r + 1)) * 1099511628211ULL;
    return h;
  }
};

template <>
struct std::hash<rs::Constraint> {
  std::size_t operator()(const rs::Constraint& c) const noexcept {
    return std::hash<rs::Order>{}(c.order()) ^ static_cast<std::size_t>(c.num_registers());
  }
};
