#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/linalg.hpp"

namespace toric::cli {

struct BenchOptions {
  std::vector<std::string> only;  // builder specs; empty runs the default suite
  bool euler_only = false;
  unsigned threads = 0;
};

/// One timed fan. Each column is measured on a freshly built fan so cached
/// multiplicities never leak between columns. Full-class columns are empty
/// for Euler-only runs.
struct BenchRow {
  std::string spec;
  std::string name;
  std::size_t rays = 0;
  std::size_t max_cones = 0;
  double chow_seconds = 0;
  std::optional<double> csm_fast_seconds;
  std::optional<double> csm_forced_seconds;
  double euler_fast_seconds = 0;
  double euler_forced_seconds = 0;
  Integer euler;
};

std::vector<std::string> default_bench_suite();

/// Throws InternalError if the columns disagree on the Euler characteristic.
std::vector<BenchRow> run_bench(const BenchOptions& options);

void render_bench_text(const std::vector<BenchRow>& rows, std::ostream& out);
nlohmann::json render_bench_json(const std::vector<BenchRow>& rows);

}  // namespace toric::cli
