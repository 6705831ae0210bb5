#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ukpb/model.hpp"

namespace ukpb {

/// Instance document:
///
///     {
///       "R": 5,
///       "capacity": "100",
///       "types": [{"profit": 5, "weight": 3}, ...]
///     }
///
/// Written with two-space indentation and a trailing newline; parsing then
/// writing reproduces a written file byte for byte.
std::string write_instance(const Instance& inst);

/// Parses and validates. Throws ValidationError on malformed documents.
Instance parse_instance(std::string_view text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace ukpb
