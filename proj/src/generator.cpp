#include "ukpb/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ukpb {

Family parse_family(std::string_view name) {
  if (name == "uncorrelated") return Family::kUncorrelated;
  if (name == "weakly-correlated") return Family::kWeaklyCorrelated;
  if (name == "strongly-correlated") return Family::kStronglyCorrelated;
  if (name == "subset-sum") return Family::kSubsetSum;
  throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kUncorrelated: return "uncorrelated";
    case Family::kWeaklyCorrelated: return "weakly-correlated";
    case Family::kStronglyCorrelated: return "strongly-correlated";
    case Family::kSubsetSum: return "subset-sum";
  }
  return "?";
}

BigInt parse_capacity_spec(std::string_view spec) {
  if (spec.starts_with("10^")) {
    const auto exponent = parse_decimal(spec.substr(3));
    if (!exponent || *exponent > 100000)
      throw std::invalid_argument("malformed capacity spec \"" + std::string(spec) + "\"");
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(*exponent));
  }
  auto value = parse_decimal(spec);
  if (!value) throw std::invalid_argument("malformed capacity spec \"" + std::string(spec) + "\"");
  return *value;
}

std::vector<Instance> generate(const GeneratorConfig& config, std::int64_t count) {
  const std::int64_t r = config.bound;
  if (r < 1 || r > kMaxCoefficientBound) throw std::invalid_argument("R out of range");
  if (config.type_count < 1) throw std::invalid_argument("type count must be positive");
  const std::int64_t spread = (r + 9) / 10;

  std::mt19937_64 rng(config.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) {
    Instance inst;
    inst.coefficient_bound = r;
    inst.capacity = config.capacity;
    for (std::int64_t j = 0; j < config.type_count; ++j) {
      const std::int64_t w = uniform(1, r);
      std::int64_t p = w;
      switch (config.family) {
        case Family::kUncorrelated: p = uniform(1, r); break;
        case Family::kWeaklyCorrelated:
          p = uniform(std::max<std::int64_t>(1, w - spread), std::min(r, w + spread));
          break;
        case Family::kStronglyCorrelated: p = std::min(r, w + spread); break;
        case Family::kSubsetSum: p = w; break;
      }
      inst.types.push_back({p, w});
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace ukpb
