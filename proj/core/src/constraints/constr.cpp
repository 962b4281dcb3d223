#include "regsynth/constraints/constr.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace rs {

RegisterSet with_data_register(const RegisterSet& regs) { return regs.with(kDataRegister); }

std::optional<Constraint> constr(const StateConstraint& pi, const Test& t, const Assignment& a) {
  const int n = t.size();
  if (pi.size() != n + 1) throw std::invalid_argument("constr: state constraint must cover R and r_d");
  const int data = n;
  int lo = -1;                                  // highest class strictly below '*'
  int hi = std::numeric_limits<int>::max();     // lowest class strictly above '*'
  int eq = -1;                                  // class equal to '*'
  for (int i = 0; i < n; ++i) {
    int c = pi.rank(i);
    switch (t.rel[static_cast<std::size_t>(i)]) {
      case Rel::Above: lo = std::max(lo, c); break;
      case Rel::Below: hi = std::min(hi, c); break;
      case Rel::Equal:
        if (eq != -1 && eq != c) return std::nullopt;
        eq = c;
        break;
    }
  }
  // Doubled slots: class k sits at 2k, the gap above it at 2k+1.
  int star;
  if (eq != -1) {
    if (!(lo < eq && eq < hi)) return std::nullopt;
    star = 2 * eq;
  } else {
    if (!(lo < hi)) return std::nullopt;
    const int dclass = pi.rank(data);
    // Classes strictly inside (lo, hi) can only hold r_d.
    if (lo < dclass && dclass < hi) star = 2 * dclass;
    else star = 2 * lo + 1;
  }
  std::vector<int> ranks(static_cast<std::size_t>(2 * (n + 1)));
  for (int i = 0; i <= n; ++i) ranks[static_cast<std::size_t>(i)] = 2 * pi.rank(i) + 2;
  for (int i = 0; i < n; ++i)
    ranks[static_cast<std::size_t>(n + 1 + i)] = a.contains(i) ? star + 2 : 2 * pi.rank(i) + 2;
  ranks[static_cast<std::size_t>(n + 1 + data)] = star + 2;
  return Constraint(n + 1, Order(ranks));
}

bool satisfies_single_new_level(const Constraint& c) {
  const int n = c.num_registers();
  int fresh = 0;
  for (const auto& cls : c.order().classes()) {
    bool has_primed = false, has_unprimed = false;
    for (int e : cls) (e < n ? has_unprimed : has_primed) = true;
    if (has_primed && !has_unprimed) ++fresh;
  }
  return fresh <= 1;
}

InducedLasso induced_lasso(const ActionLasso& w, const RegisterSet& regs) {
  if (w.loop.empty()) throw std::invalid_argument("induced_lasso: empty action loop");
  InducedLasso out;
  out.seq.registers = with_data_register(regs);
  const int nd = regs.size() + 1;
  StateConstraint pi = Order::all_equal(nd);
  std::vector<Constraint> seq;
  std::size_t step = 0;
  for (const auto& letter : w.prefix) {
    auto c = constr(pi, letter.test, letter.asgn);
    if (!c) {
      out.inconsistent_at = step;
      return out;
    }
    seq.push_back(*c);
    pi = c->end();
    ++step;
  }
  std::map<std::pair<std::size_t, Order>, std::size_t> seen;
  std::size_t k = 0;
  while (true) {
    auto key = std::make_pair(k, pi);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.seq.prefix.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.seq.loop.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second), seq.end());
      return out;
    }
    seen.emplace(key, seq.size());
    const auto& letter = w.loop[k];
    auto c = constr(pi, letter.test, letter.asgn);
    if (!c) {
      out.inconsistent_at = step;
      return out;
    }
    seq.push_back(*c);
    pi = c->end();
    ++step;
    k = (k + 1) % w.loop.size();
  }
}

}  // namespace rs
