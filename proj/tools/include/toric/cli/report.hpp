#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/chow.hpp"
#include "toric/csm.hpp"
#include "toric/fan.hpp"

namespace toric::cli {

/// Everything `csm` reports about one fan. The text and JSON renderings
/// carry the same fields.
struct OutputReport {
  std::string fan_name;
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::pair<Cone, Integer>> max_cones;  // with multiplicities
  bool smooth = false;

  Cone elim_cone;
  std::vector<RayIndex> kept_variables;
  std::vector<std::pair<RayIndex, GradedClass>> substitution;  // eliminated x_i over kept variables
  std::vector<std::size_t> graded_dimensions;

  std::optional<GradedClass> csm_class;  // absent for Euler-only runs
  std::map<std::size_t, GradedClass> contributions;
  Integer euler;

  double chow_seconds = 0;
  double class_seconds = 0;
};

struct ReportOptions {
  std::optional<Cone> elim_cone;
  bool euler_only = false;
  CsmOptions csm;
};

OutputReport make_report(const Fan& fan, const ReportOptions& options);

void render_text(const OutputReport& report, std::ostream& out);
nlohmann::json render_json(const OutputReport& report);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json integer_json(const Integer& v);

/// Eliminated variables of a presentation written over the kept ones.
std::vector<std::pair<RayIndex, GradedClass>> eliminated_substitution(const ChowPresentation& p);

}  // namespace toric::cli
