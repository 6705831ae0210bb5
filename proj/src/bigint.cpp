#include "ukpb/bigint.hpp"

#include <algorithm>
#include <limits>

namespace ukpb {

std::optional<BigInt> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  return BigInt(std::string(text));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(value);
}

}  // namespace ukpb
