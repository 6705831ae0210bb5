#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ukpb {

/// Exact integer used for capacities, counts and objective values.
using BigInt = boost::multiprecision::cpp_int;

/// Parses a canonical nonnegative decimal ("0" or digits without a leading
/// zero). Returns nullopt on anything else, including signs and whitespace.
std::optional<BigInt> parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Value as int64 if it fits.
std::optional<std::int64_t> to_int64(const BigInt& value);

/// Floor division for machine integers (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

}  // namespace ukpb
