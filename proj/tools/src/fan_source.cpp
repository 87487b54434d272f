#include "toric/cli/fan_source.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/builders.hpp"
#include "toric/error.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(std::string_view source, const std::string& field, const std::string& what) {
  throw InputError(std::string(source) + ": field '" + field + "': " + what);
}

Integer read_integer(const json& v, std::string_view source, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  field_error(source, field, "expected an integer");
}

std::string integer_literal(const Integer& v) {
  if (v.fits_slong_p()) return v.get_str();
  return '"' + v.get_str() + '"';
}

std::uint64_t spec_number(std::string_view text, std::string_view spec) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw UsageError("bad number '" + std::string(text) + "' in builder spec '" + std::string(spec) + "'");
  return v;
}

Fan single_spec(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos) throw UsageError("builder spec needs NAME=VALUE: '" + std::string(spec) + "'");
  const auto name = spec.substr(0, eq);
  const auto value = spec.substr(eq + 1);
  if (name == "pn") return projective_space(spec_number(value, spec));
  if (name == "hirzebruch") return hirzebruch(spec_number(value, spec));
  if (name == "wps") {
    std::vector<std::int64_t> weights;
    std::size_t start = 0;
    while (true) {
      const auto comma = value.find(',', start);
      const auto piece = value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto w = spec_number(piece, spec);
      if (w > static_cast<std::uint64_t>(INT64_MAX)) throw UsageError("weight too large in '" + std::string(spec) + "'");
      weights.push_back(static_cast<std::int64_t>(w));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return weighted_projective(weights);
  }
  throw UsageError("unknown builder '" + std::string(name) + "' (expected pn, hirzebruch or wps)");
}

}  // namespace

Fan parse_fan_text(std::string_view text, std::string_view source, FanOptions options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what.erase(0, pos + 2);
    throw InputError(std::string(source) + ": " + what);
  }
  if (!doc.is_object()) throw InputError(std::string(source) + ": top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "dim" && key != "rays" && key != "max_cones") field_error(source, key, "unknown field");
  for (const char* key : {"dim", "rays", "max_cones"})
    if (!doc.contains(key)) field_error(source, key, "missing");

  const json& dim_v = doc["dim"];
  if (!dim_v.is_number_integer() || dim_v.get<std::int64_t>() < 1) field_error(source, "dim", "expected a positive integer");
  const auto dim = dim_v.get<std::size_t>();

  const json& rays_v = doc["rays"];
  if (!rays_v.is_array()) field_error(source, "rays", "expected an array");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < rays_v.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    const json& ray = rays_v[i];
    if (!ray.is_array() || ray.size() != dim)
      field_error(source, field, "expected an array of " + std::to_string(dim) + " integers");
    LatticeVector v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(read_integer(ray[k], source, field + "[" + std::to_string(k) + "]"));
    rays.push_back(std::move(v));
  }

  const json& cones_v = doc["max_cones"];
  if (!cones_v.is_array()) field_error(source, "max_cones", "expected an array");
  std::vector<std::vector<RayIndex>> cones;
  for (std::size_t c = 0; c < cones_v.size(); ++c) {
    const std::string field = "max_cones[" + std::to_string(c) + "]";
    const json& cone = cones_v[c];
    if (!cone.is_array()) field_error(source, field, "expected an array of ray indices");
    std::vector<RayIndex> idx;
    for (std::size_t k = 0; k < cone.size(); ++k) {
      const json& v = cone[k];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() > UINT32_MAX)
        field_error(source, field + "[" + std::to_string(k) + "]", "expected a non-negative ray index");
      idx.push_back(v.get<RayIndex>());
    }
    cones.push_back(std::move(idx));
  }

  Fan fan = build_fan(dim, std::move(rays), cones, options);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error(source, "name", "expected a string");
    fan.set_name(doc["name"].get<std::string>());
  }
  return fan;
}

Fan parse_fan_file(const std::filesystem::path& path, FanOptions options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read fan file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fan_text(buffer.str(), path.string(), options);
}

std::string render_fan_file(const Fan& fan) {
  std::ostringstream out;
  out << "{\n";
  if (!fan.name().empty()) out << "  \"name\": " << json(fan.name()).dump() << ",\n";
  out << "  \"dim\": " << fan.ambient_dim() << ",\n  \"rays\": [\n";
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    out << "    [";
    for (std::size_t k = 0; k < fan.ambient_dim(); ++k) out << (k ? ", " : "") << integer_literal(fan.rays()[i][k]);
    out << (i + 1 < fan.ray_count() ? "],\n" : "]\n");
  }
  out << "  ],\n  \"max_cones\": [\n";
  const auto& cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    out << "    [";
    for (std::size_t k = 0; k < cones[c].dim(); ++k) out << (k ? ", " : "") << cones[c].rays()[k];
    out << (c + 1 < cones.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Fan fan_from_spec(std::string_view spec) {
  const auto star = spec.find('*');
  if (star == std::string_view::npos) return single_spec(spec);
  return product(single_spec(spec.substr(0, star)), fan_from_spec(spec.substr(star + 1)));
}

}  // namespace toric::cli
