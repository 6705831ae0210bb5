#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ukpb/model.hpp"

namespace ukpb {

enum class Family { kUncorrelated, kWeaklyCorrelated, kStronglyCorrelated, kSubsetSum };

/// Accepts "uncorrelated", "weakly-correlated", "strongly-correlated",
/// "subset-sum". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Decimal string or "10^k". Throws std::invalid_argument when malformed.
BigInt parse_capacity_spec(std::string_view spec);

struct GeneratorConfig {
  Family family = Family::kUncorrelated;
  std::int64_t bound = 10;
  std::int64_t type_count = 10;
  BigInt capacity = 0;
  std::uint64_t seed = 0;
};

/// Weights uniform on [1, R]; profits by family with spread ceil(R/10).
/// Deterministic for a given config.
std::vector<Instance> generate(const GeneratorConfig& config, std::int64_t count);

}  // namespace ukpb
