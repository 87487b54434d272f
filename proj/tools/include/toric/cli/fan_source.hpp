#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toric/fan.hpp"

namespace toric::cli {

/// Bad command line: unknown builder, conflicting fan sources. Exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fan file format, a JSON document:
///
///   { "name": "H_5", "dim": 2,
///     "rays": [[1, 0], [0, 1], [-1, 5], [0, -1]],
///     "max_cones": [[0, 1], [1, 2], [2, 3], [0, 3]] }
///
/// Ray indices are 0-based. "name" is optional. Coordinates are JSON
/// integers or, for values beyond 64 bits, decimal strings.
Fan parse_fan_text(std::string_view text, std::string_view source = "<input>", FanOptions options = {});
Fan parse_fan_file(const std::filesystem::path& path, FanOptions options = {});
std::string render_fan_file(const Fan& fan);

/// Builder specs: "pn=N", "hirzebruch=R", "wps=q0,q1,...". A '*' between
/// specs builds the product, e.g. "pn=5*pn=6".
Fan fan_from_spec(std::string_view spec);

}  // namespace toric::cli
