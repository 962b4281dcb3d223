#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rs {

using BigInt = boost::multiprecision::cpp_int;
// Exact rational in canonical form; naturals are rationals with denominator 1.
using Value = boost::multiprecision::cpp_rational;

enum class Domain { Nat, Rat };

const char* domain_name(Domain d);
std::optional<Domain> parse_domain(std::string_view text);

std::string to_string(const Value& v);

// Accepts "p", "-p" and (for Rat) "p/q". Nat rejects negatives and fractions.
std::optional<Value> parse_value(std::string_view text, Domain domain);

bool in_domain(const Value& v, Domain domain);

BigInt pow2(unsigned exponent);

}  // namespace rs
