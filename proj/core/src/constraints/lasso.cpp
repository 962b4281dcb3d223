#include "regsynth/constraints/lasso.hpp"

#include <sstream>
#include <stdexcept>

namespace rs {

const Constraint& LassoConstraintSeq::at(std::size_t moment) const {
  if (moment < prefix.size()) return prefix[moment];
  return loop[(moment - prefix.size()) % loop.size()];
}

bool LassoConstraintSeq::consistent() const {
  if (loop.empty()) return false;
  const std::size_t total = prefix.size() + loop.size();
  for (std::size_t i = 0; i < total; ++i)
    if (at(i).num_registers() != num_registers()) return false;
  for (std::size_t i = 0; i + 1 <= total; ++i)
    if (!adjacent_consistent(at(i), at(i + 1))) return false;
  return true;
}

LassoConstraintSeq LassoConstraintSeq::rotated(std::size_t k) const {
  LassoConstraintSeq out;
  out.registers = registers;
  out.prefix = prefix;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < k % n; ++i) out.prefix.push_back(loop[i]);
  for (std::size_t i = 0; i < n; ++i) out.loop.push_back(loop[(i + k) % n]);
  return out;
}

LassoConstraintSeq LassoConstraintSeq::unrolled(std::size_t times) const {
  LassoConstraintSeq out;
  out.registers = registers;
  out.prefix = prefix;
  for (std::size_t t = 0; t < std::max<std::size_t>(times, 1); ++t)
    out.loop.insert(out.loop.end(), loop.begin(), loop.end());
  return out;
}

ConstraintFile parse_constraint_file(const std::string& text) {
  ConstraintFile f;
  bool have_regs = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "registers") {
      if (have_regs) fail("duplicate registers line");
      std::vector<std::string> names;
      std::string w;
      while (words >> w) names.push_back(w);
      try {
        f.registers = RegisterSet(names);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      have_regs = true;
    } else if (first == "loop-start") {
      if (f.loop_start) fail("duplicate loop-start marker");
      f.loop_start = f.constraints.size();
    } else {
      if (!have_regs) fail("constraint before the registers line");
      try {
        f.constraints.push_back(parse_constraint(line, f.registers));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
  }
  if (!have_regs) throw std::invalid_argument("missing registers line");
  return f;
}

LassoConstraintSeq parse_lasso(const std::string& text) {
  ConstraintFile f = parse_constraint_file(text);
  if (!f.loop_start) throw std::invalid_argument("missing loop-start marker");
  if (*f.loop_start >= f.constraints.size()) throw std::invalid_argument("empty loop");
  LassoConstraintSeq seq;
  seq.registers = f.registers;
  seq.prefix.assign(f.constraints.begin(), f.constraints.begin() + static_cast<std::ptrdiff_t>(*f.loop_start));
  seq.loop.assign(f.constraints.begin() + static_cast<std::ptrdiff_t>(*f.loop_start), f.constraints.end());
  return seq;
}

std::string format_lasso(const LassoConstraintSeq& seq) {
  std::ostringstream out;
  out << "registers";
  for (const auto& n : seq.registers.names()) out << ' ' << n;
  out << '\n';
  for (const auto& c : seq.prefix) out << format_constraint(c, seq.registers) << '\n';
  out << "loop-start\n";
  for (const auto& c : seq.loop) out << format_constraint(c, seq.registers) << '\n';
  return out.str();
}

bool prefix_consistent(const std::vector<Constraint>& prefix) {
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
    if (!adjacent_consistent(prefix[i], prefix[i + 1])) return false;
  return true;
}

}  // namespace rs
