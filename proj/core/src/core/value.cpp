#include "regsynth/core/value.hpp"

#include <cctype>

namespace rs {

const char* domain_name(Domain d) { return d == Domain::Nat ? "nat" : "rat"; }

std::optional<Domain> parse_domain(std::string_view text) {
  if (text == "nat" || text == "N") return Domain::Nat;
  if (text == "rat" || text == "Q") return Domain::Rat;
  return std::nullopt;
}

std::string to_string(const Value& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

std::optional<BigInt> parse_int(std::string_view s, bool allow_sign) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    if (!allow_sign) return std::nullopt;
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  BigInt out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    out = out * 10 + (c - '0');
  }
  return neg ? BigInt(-out) : out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Value> parse_value(std::string_view text, Domain domain) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text, domain == Domain::Rat);
    if (!n) return std::nullopt;
    return Value(*n);
  }
  if (domain == Domain::Nat) return std::nullopt;
  auto num = parse_int(trim(text.substr(0, slash)), true);
  auto den = parse_int(trim(text.substr(slash + 1)), false);
  if (!num || !den || *den == 0) return std::nullopt;
  return Value(*num, *den);
}

bool in_domain(const Value& v, Domain domain) {
  if (domain == Domain::Rat) return true;
  return boost::multiprecision::denominator(v) == 1 && v >= 0;
}

BigInt pow2(unsigned exponent) {
  BigInt one = 1;
  return one << exponent;
}

}  // namespace rs
