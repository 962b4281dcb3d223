#include "regsynth/core/order.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace rs {

Order::Order(const std::vector<int>& ranks) {
  std::set<int> distinct(ranks.begin(), ranks.end());
  std::vector<int> sorted(distinct.begin(), distinct.end());
  rank_.reserve(ranks.size());
  for (int r : ranks) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), r);
    rank_.push_back(static_cast<std::int8_t>(it - sorted.begin()));
  }
}

Order Order::all_equal(int m) { return Order(std::vector<int>(static_cast<std::size_t>(m), 0)); }

int Order::num_classes() const {
  int mx = -1;
  for (auto r : rank_) mx = std::max<int>(mx, r);
  return mx + 1;
}

std::vector<std::vector<int>> Order::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes()));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(rank(i))].push_back(i);
  return out;
}

Order Order::restrict(const std::vector<int>& elements) const {
  std::vector<int> r;
  r.reserve(elements.size());
  for (int e : elements) r.push_back(rank(e));
  return Order(r);
}

namespace {
void enumerate_orders(int m, int i, std::vector<int>& ranks, std::vector<Order>& out) {
  if (i == m) {
    // Keep only dense rank vectors so each ordered partition appears once.
    int mx = -1;
    for (int r : ranks) mx = std::max(mx, r);
    std::vector<bool> used(static_cast<std::size_t>(mx + 1), false);
    for (int r : ranks) used[static_cast<std::size_t>(r)] = true;
    for (bool u : used)
      if (!u) return;
    out.emplace_back(ranks);
    return;
  }
  for (int r = 0; r < m; ++r) {
    ranks[static_cast<std::size_t>(i)] = r;
    enumerate_orders(m, i + 1, ranks, out);
  }
}
}  // namespace

std::vector<Order> all_orders(int m) {
  std::vector<Order> out;
  std::vector<int> ranks(static_cast<std::size_t>(m), 0);
  if (m == 0) return {Order(ranks)};
  enumerate_orders(m, 0, ranks, out);
  return out;
}

Constraint::Constraint(int n, Order order) : n_(n), order_(std::move(order)) {
  if (order_.size() != 2 * n) throw std::invalid_argument("constraint order has wrong arity");
}

StateConstraint Constraint::start() const {
  std::vector<int> el;
  for (int i = 0; i < n_; ++i) el.push_back(i);
  return order_.restrict(el);
}

StateConstraint Constraint::end() const {
  std::vector<int> el;
  for (int i = 0; i < n_; ++i) el.push_back(n_ + i);
  return order_.restrict(el);
}

Constraint Constraint::identity(const StateConstraint& s) {
  std::vector<int> r;
  for (int i = 0; i < s.size(); ++i) r.push_back(s.rank(i));
  for (int i = 0; i < s.size(); ++i) r.push_back(s.rank(i));
  return Constraint(s.size(), Order(r));
}

std::string format_state_constraint(const StateConstraint& s, const RegisterSet& regs) {
  std::string out;
  for (const auto& cls : s.classes()) {
    if (!out.empty()) out += " < ";
    out += "{";
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k) out += ",";
      out += regs.name(cls[k]);
    }
    out += "}";
  }
  return out;
}

std::string format_constraint(const Constraint& c, const RegisterSet& regs) {
  const int n = c.num_registers();
  std::string out;
  for (const auto& cls : c.order().classes()) {
    if (!out.empty()) out += " < ";
    out += "{";
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k) out += ",";
      int e = cls[k];
      out += e < n ? regs.name(e) : regs.name(e - n) + "'";
    }
    out += "}";
  }
  return out;
}

Constraint parse_constraint(const std::string& text, const RegisterSet& regs) {
  const int n = regs.size();
  std::vector<std::vector<int>> groups;
  char dir = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw std::invalid_argument("expected '{' at column " + std::to_string(i + 1));
    ++i;
    std::vector<int> group;
    std::string name;
    auto flush = [&] {
      std::string nm = name;
      while (!nm.empty() && std::isspace(static_cast<unsigned char>(nm.back()))) nm.pop_back();
      std::size_t s = 0;
      while (s < nm.size() && std::isspace(static_cast<unsigned char>(nm[s]))) ++s;
      nm = nm.substr(s);
      if (nm.empty()) throw std::invalid_argument("empty register name in constraint");
      bool primed = nm.back() == '\'';
      if (primed) nm.pop_back();
      auto idx = regs.find(nm);
      if (!idx) throw std::invalid_argument("unknown register '" + nm + "' in constraint");
      group.push_back(primed ? n + *idx : *idx);
      name.clear();
    };
    while (i < text.size() && text[i] != '}') {
      if (text[i] == ',') {
        flush();
      } else {
        name += text[i];
      }
      ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated '{' in constraint");
    flush();
    ++i;
    groups.push_back(group);
    skip_ws();
    if (i >= text.size()) break;
    char sep = text[i];
    if (sep != '<' && sep != '>') throw std::invalid_argument("expected '<' or '>' between classes");
    if (dir && dir != sep) throw std::invalid_argument("mixed '<' and '>' in constraint");
    dir = sep;
    ++i;
    skip_ws();
  }
  std::vector<int> ranks(static_cast<std::size_t>(2 * n), -1);
  const int k = static_cast<int>(groups.size());
  for (int g = 0; g < k; ++g) {
    int r = dir == '>' ? k - 1 - g : g;
    for (int e : groups[static_cast<std::size_t>(g)]) {
      if (ranks[static_cast<std::size_t>(e)] != -1) throw std::invalid_argument("register listed twice in constraint");
      ranks[static_cast<std::size_t>(e)] = r;
    }
  }
  for (int e = 0; e < 2 * n; ++e)
    if (ranks[static_cast<std::size_t>(e)] == -1) {
      std::string nm = e < n ? regs.name(e) : regs.name(e - n) + "'";
      throw std::invalid_argument("constraint does not mention " + nm);
    }
  return Constraint(n, Order(ranks));
}

Constraint constraint_of(const Valuation& before, const Valuation& after) {
  std::vector<Value> keys = before;
  keys.insert(keys.end(), after.begin(), after.end());
  return Constraint(static_cast<int>(before.size()), Order::from_keys(keys));
}

bool satisfies(const Valuation& before, const Valuation& after, const Constraint& c) {
  if (static_cast<int>(before.size()) != c.num_registers() || after.size() != before.size()) return false;
  return constraint_of(before, after) == c;
}

bool adjacent_consistent(const Constraint& c1, const Constraint& c2) {
  return c1.num_registers() == c2.num_registers() && c1.end() == c2.start();
}

}  // namespace rs
