#include "toric/cli/report.hpp"

#include <chrono>

#include "toric/cli/polynomial.hpp"

namespace toric::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string cone_text(const Cone& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.dim(); ++k) out += (k ? ", " : "") + std::to_string(c.rays()[k]);
  return out + "}";
}

std::string vector_text(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].get_str();
  return out + ")";
}

nlohmann::json cone_json(const Cone& c) { return std::vector<RayIndex>(c.rays().begin(), c.rays().end()); }

}  // namespace

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::vector<std::pair<RayIndex, GradedClass>> eliminated_substitution(const ChowPresentation& p) {
  std::vector<std::pair<RayIndex, GradedClass>> out;
  const auto kept = p.kept_variables();
  for (RayIndex i : p.elim_cone().rays()) {
    GradedClass form;
    const auto coefficients = p.substitution(i);
    for (std::size_t u = 0; u < kept.size(); ++u) form.add(Monomial::variable(kept[u]), coefficients[u]);
    out.emplace_back(i, std::move(form));
  }
  return out;
}

OutputReport make_report(const Fan& fan, const ReportOptions& options) {
  OutputReport r;
  r.fan_name = fan.name();
  r.dim = fan.ambient_dim();
  r.rays = fan.rays();

  auto start = Clock::now();
  const ChowPresentation p = ChowPresentation::build(fan, options.elim_cone);
  r.chow_seconds = seconds_since(start);

  start = Clock::now();
  if (options.euler_only) {
    r.euler = euler_characteristic(fan, p, true, options.csm);
  } else {
    CsmResult result = compute_csm(fan, p, options.csm);
    r.csm_class = std::move(result.csm_class);
    r.contributions = std::move(result.per_dim_contributions);
    r.euler = result.euler;
  }
  r.class_seconds = seconds_since(start);

  for (const Cone& c : fan.max_cones()) r.max_cones.emplace_back(c, fan.multiplicity(c));
  r.smooth = is_smooth(fan);
  r.elim_cone = p.elim_cone();
  r.kept_variables.assign(p.kept_variables().begin(), p.kept_variables().end());
  r.substitution = eliminated_substitution(p);
  r.graded_dimensions = p.graded_dimensions();
  return r;
}

void render_text(const OutputReport& r, std::ostream& out) {
  out << "fan: " << (r.fan_name.empty() ? "(unnamed)" : r.fan_name) << ", dim " << r.dim << ", " << r.rays.size()
      << " rays, " << r.max_cones.size() << " maximal cones, " << (r.smooth ? "smooth" : "singular") << '\n';
  out << "rays:\n";
  for (std::size_t i = 0; i < r.rays.size(); ++i) out << "  x" << i << "  " << vector_text(r.rays[i]) << '\n';
  out << "maximal cones:\n";
  for (const auto& [c, mult] : r.max_cones) out << "  " << cone_text(c) << "  mult " << mult.get_str() << '\n';
  out << "elimination cone: " << cone_text(r.elim_cone) << '\n';
  out << "kept variables:";
  for (RayIndex i : r.kept_variables) out << " x" << i;
  out << '\n';
  for (const auto& [i, form] : r.substitution) out << "  x" << i << " = " << render_polynomial(form) << '\n';
  out << "graded dimensions:";
  for (std::size_t d : r.graded_dimensions) out << ' ' << d;
  out << '\n';
  if (r.csm_class) {
    for (const auto& [d, piece] : r.contributions)
      out << "cones of dim " << d << ": " << render_polynomial(piece) << '\n';
    out << "c_SM = " << render_polynomial(*r.csm_class) << '\n';
  }
  out << "euler = " << r.euler.get_str() << '\n';
  out << "time: chow ring " << r.chow_seconds << " s, " << (r.csm_class ? "class " : "euler ") << r.class_seconds
      << " s\n";
}

nlohmann::json render_json(const OutputReport& r) {
  using nlohmann::json;
  json rays = json::array();
  for (const auto& v : r.rays) {
    json row = json::array();
    for (const auto& x : v) row.push_back(integer_json(x));
    rays.push_back(std::move(row));
  }
  json cones = json::array();
  for (const auto& [c, mult] : r.max_cones) cones.push_back({{"rays", cone_json(c)}, {"multiplicity", integer_json(mult)}});
  json substitution = json::object();
  for (const auto& [i, form] : r.substitution) substitution["x" + std::to_string(i)] = render_polynomial(form);

  json doc = {
      {"fan", {{"name", r.fan_name}, {"dim", r.dim}, {"rays", rays}, {"max_cones", cones}, {"smooth", r.smooth}}},
      {"presentation",
       {{"elim_cone", cone_json(r.elim_cone)},
        {"kept_variables", r.kept_variables},
        {"substitution", substitution},
        {"graded_dimensions", r.graded_dimensions}}},
      {"euler", integer_json(r.euler)},
      {"timing", {{"chow_seconds", r.chow_seconds}, {"class_seconds", r.class_seconds}}},
  };
  if (r.csm_class) {
    json contributions = json::object();
    for (const auto& [d, piece] : r.contributions) contributions[std::to_string(d)] = render_polynomial(piece);
    doc["csm"] = render_polynomial(*r.csm_class);
    doc["contributions"] = contributions;
  }
  return doc;
}

}  // namespace toric::cli
