#pragma once

#include "regsynth/core/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rs {

// Reserved names: the last-data register and the zero register.
inline constexpr const char* kDataRegister = "r_d";
inline constexpr const char* kZeroRegister = "r_0";

class RegisterSet {
 public:
  RegisterSet() = default;
  explicit RegisterSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  // Appends a register; throws if the name already exists.
  int add(const std::string& name);
  // Copy with one extra register appended.
  RegisterSet with(const std::string& name) const;

  bool operator==(const RegisterSet&) const = default;

 private:
  std::vector<std::string> names_;
};

// Relation of the incoming datum '*' to a register.
enum class Rel : std::uint8_t { Below = 0, Equal = 1, Above = 2 };  // *<r, *=r, *>r

char rel_symbol(Rel r);

// A maximal test: one relation per register.
struct Test {
  std::vector<Rel> rel;

  int size() const { return static_cast<int>(rel.size()); }
  // Base-3 code, register 0 most significant.
  std::uint32_t code() const;
  static Test decode(std::uint32_t code, int num_registers);
  bool operator==(const Test&) const = default;
};

std::uint32_t num_tests(int num_registers);
// All 3^n tests in code order.
std::vector<Test> all_tests(int num_registers);

// Human-readable rendering, e.g. "rl<* & *<rM".
std::string format_test(const Test& t, const RegisterSet& regs);

struct Assignment {
  std::uint32_t mask = 0;

  bool contains(int r) const { return (mask >> r) & 1U; }
  void insert(int r) { mask |= (1U << r); }
  bool empty() const { return mask == 0; }
  bool operator==(const Assignment&) const = default;
};

std::string format_assignment(const Assignment& a, const RegisterSet& regs);

using Valuation = std::vector<Value>;

Valuation zero_valuation(int num_registers);
bool test_holds(const Valuation& v, const Value& d, const Test& t);
// The unique test satisfied by (v, d).
Test test_of(const Valuation& v, const Value& d);
Valuation update_valuation(const Valuation& v, const Value& d, const Assignment& a);

// A test is realisable against v when some datum satisfies it (always true over Q
// when consistent with the order of v; over N the gap may be empty).
bool test_consistent_with_order(const Valuation& v, const Test& t);

}  // namespace rs

template <>
struct std::hash<rs::Test> {
  std::size_t operator()(const rs::Test& t) const noexcept { return t.code(); }
};
