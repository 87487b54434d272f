#include "toric/cli/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "toric/chow.hpp"
#include "toric/cli/fan_source.hpp"
#include "toric/cli/report.hpp"
#include "toric/csm.hpp"
#include "toric/error.hpp"

namespace toric::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void agree(const Integer& expected, const Integer& got, const std::string& spec, const char* column) {
  if (expected != got)
    throw InternalError("bench " + spec + ": " + column + " gives euler " + got.get_str() + ", expected " +
                        expected.get_str());
}

std::string seconds_cell(std::optional<double> s) {
  if (!s) return "-";
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << *s;
  return out.str();
}

}  // namespace

std::vector<std::string> default_bench_suite() {
  return {"pn=6",         "pn=5*pn=6",    "pn=5*pn=8",    "hirzebruch=1", "hirzebruch=5",
          "hirzebruch=10", "wps=1,1,2",    "wps=1,2,3",    "wps=1,1,1,3",  "wps=1,1,2,3"};
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  const auto specs = options.only.empty() ? default_bench_suite() : options.only;
  std::vector<BenchRow> rows;
  for (const auto& spec : specs) {
    BenchRow row;
    row.spec = spec;
    {
      const Fan fan = fan_from_spec(spec);
      row.name = fan.name();
      row.rays = fan.ray_count();
      row.max_cones = fan.max_cones().size();
      row.chow_seconds = timed([&] { (void)ChowPresentation::build(fan); });
    }
    row.euler = euler_by_cone_count(fan_from_spec(spec));

    for (bool forced : {false, true}) {
      const CsmOptions csm{forced, options.threads};
      {
        const Fan fan = fan_from_spec(spec);
        const auto p = ChowPresentation::build(fan);
        Integer chi;
        const double t = timed([&] { chi = euler_characteristic(fan, p, true, csm); });
        (forced ? row.euler_forced_seconds : row.euler_fast_seconds) = t;
        agree(row.euler, chi, spec, forced ? "forced euler" : "fast euler");
      }
      if (!options.euler_only) {
        const Fan fan = fan_from_spec(spec);
        const auto p = ChowPresentation::build(fan);
        CsmResult result;
        const double t = timed([&] { result = compute_csm(fan, p, csm); });
        (forced ? row.csm_forced_seconds : row.csm_fast_seconds) = t;
        agree(row.euler, result.euler, spec, forced ? "forced csm" : "fast csm");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void render_bench_text(const std::vector<BenchRow>& rows, std::ostream& out) {
  const std::vector<std::pair<std::string, int>> header = {
      {"fan", 16}, {"rays", 6}, {"max", 6}, {"chow s", 10}, {"csm s", 10}, {"euler s", 10},
      {"csm hnf s", 11}, {"euler hnf s", 12}, {"euler", 8}};
  for (const auto& [title, width] : header) out << std::left << std::setw(width) << title;
  out << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(16) << (r.name.empty() ? r.spec : r.name) << std::setw(6) << r.rays << std::setw(6)
        << r.max_cones << std::setw(10) << seconds_cell(r.chow_seconds) << std::setw(10)
        << seconds_cell(r.csm_fast_seconds) << std::setw(10) << seconds_cell(r.euler_fast_seconds) << std::setw(11)
        << seconds_cell(r.csm_forced_seconds) << std::setw(12) << seconds_cell(r.euler_forced_seconds)
        << r.euler.get_str() << '\n';
  }
}

nlohmann::json render_bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"spec", r.spec},
                          {"name", r.name},
                          {"rays", r.rays},
                          {"max_cones", r.max_cones},
                          {"chow_seconds", r.chow_seconds},
                          {"euler_fast_seconds", r.euler_fast_seconds},
                          {"euler_forced_seconds", r.euler_forced_seconds},
                          {"euler", integer_json(r.euler)}};
    row["csm_fast_seconds"] = r.csm_fast_seconds ? nlohmann::json(*r.csm_fast_seconds) : nlohmann::json(nullptr);
    row["csm_forced_seconds"] = r.csm_forced_seconds ? nlohmann::json(*r.csm_forced_seconds) : nlohmann::json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace toric::cli
