#include "regsynth/core/model.hpp"

#include <stdexcept>

namespace rs {

RegisterSet::RegisterSet(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

std::optional<int> RegisterSet::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

int RegisterSet::add(const std::string& name) {
  if (find(name)) throw std::invalid_argument("duplicate register: " + name);
  if (names_.size() >= 31) throw std::invalid_argument("too many registers");
  names_.push_back(name);
  return size() - 1;
}

RegisterSet RegisterSet::with(const std::string& name) const {
  RegisterSet out = *this;
  out.add(name);
  return out;
}

char rel_symbol(Rel r) {
  switch (r) {
    case Rel::Below: return '<';
    case Rel::Equal: return '=';
    case Rel::Above: return '>';
  }
  return '?';
}

std::uint32_t Test::code() const {
  std::uint32_t c = 0;
  for (Rel r : rel) c = c * 3 + static_cast<std::uint32_t>(r);
  return c;
}

Test Test::decode(std::uint32_t code, int num_registers) {
  Test t;
  t.rel.assign(static_cast<std::size_t>(num_registers), Rel::Below);
  for (int i = num_registers - 1; i >= 0; --i) {
    t.rel[static_cast<std::size_t>(i)] = static_cast<Rel>(code % 3);
    code /= 3;
  }
  return t;
}

std::uint32_t num_tests(int num_registers) {
  std::uint32_t n = 1;
  for (int i = 0; i < num_registers; ++i) n *= 3;
  return n;
}

std::vector<Test> all_tests(int num_registers) {
  std::vector<Test> out;
  const auto n = num_tests(num_registers);
  out.reserve(n);
  for (std::uint32_t c = 0; c < n; ++c) out.push_back(Test::decode(c, num_registers));
  return out;
}

std::string format_test(const Test& t, const RegisterSet& regs) {
  if (t.rel.empty()) return "TOP";
  std::string out;
  for (int i = 0; i < t.size(); ++i) {
    if (!out.empty()) out += " & ";
    out += "* ";
    out += rel_symbol(t.rel[static_cast<std::size_t>(i)]);
    out += ' ';
    out += regs.name(i);
  }
  return out;
}

std::string format_assignment(const Assignment& a, const RegisterSet& regs) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < regs.size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ",";
    out += regs.name(i);
    first = false;
  }
  return out + "}";
}

Valuation zero_valuation(int num_registers) {
  return Valuation(static_cast<std::size_t>(num_registers), Value(0));
}

bool test_holds(const Valuation& v, const Value& d, const Test& t) {
  if (v.size() != t.rel.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    switch (t.rel[i]) {
      case Rel::Below: if (!(d < v[i])) return false; break;
      case Rel::Equal: if (!(d == v[i])) return false; break;
      case Rel::Above: if (!(d > v[i])) return false; break;
    }
  }
  return true;
}

Test test_of(const Valuation& v, const Value& d) {
  Test t;
  t.rel.reserve(v.size());
  for (const auto& x : v) t.rel.push_back(d < x ? Rel::Below : (d == x ? Rel::Equal : Rel::Above));
  return t;
}

Valuation update_valuation(const Valuation& v, const Value& d, const Assignment& a) {
  Valuation out = v;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (a.contains(static_cast<int>(i))) out[i] = d;
  return out;
}

bool test_consistent_with_order(const Valuation& v, const Test& t) {
  // '*' must sit above every register it is Above, below every register it is
  // Below, and equal to all registers it is Equal to.
  std::optional<Value> eq, lo, hi;
  for (std::size_t i = 0; i < v.size(); ++i) {
    switch (t.rel[i]) {
      case Rel::Equal:
        if (eq && *eq != v[i]) return false;
        eq = v[i];
        break;
      case Rel::Above:
        if (!lo || v[i] > *lo) lo = v[i];
        break;
      case Rel::Below:
        if (!hi || v[i] < *hi) hi = v[i];
        break;
    }
  }
  if (eq) return (!lo || *eq > *lo) && (!hi || *eq < *hi);
  return !lo || !hi || *lo < *hi;
}

}  // namespace rs
