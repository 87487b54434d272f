#include "toric/cli/app.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toric/builders.hpp"
#include "toric/chow.hpp"
#include "toric/cli/bench.hpp"
#include "toric/cli/fan_source.hpp"
#include "toric/cli/polynomial.hpp"
#include "toric/cli/report.hpp"
#include "toric/csm.hpp"
#include "toric/error.hpp"

namespace toric::cli {

namespace {

struct Flags {
  std::string fan_file;
  std::string builder;
  std::vector<std::string> product_specs;
  bool euler_only = false;
  std::string elim_cone;
  bool force_hnf = false;
  bool trust_input = false;
  bool json = false;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::vector<std::string> only;
};

void add_fan_source(CLI::App& sub, Flags& f) {
  sub.add_option("--fan", f.fan_file, "Fan file (JSON)");
  sub.add_option("--builder", f.builder, "pn=N | hirzebruch=R | wps=q0,q1,...");
  sub.add_option("--product", f.product_specs, "Product of two builder specs")->expected(2);
  sub.add_flag("--trust-input", f.trust_input, "Skip primitivity, simpliciality and wall checks");
  sub.add_option("--threads", f.threads, "Worker threads for multiplicities (0 = all cores)");
  sub.add_flag("--json", f.json, "Machine-readable output");
}

Fan load_fan(const Flags& f) {
  const int sources = !f.fan_file.empty() + !f.builder.empty() + !f.product_specs.empty();
  if (sources != 1) throw UsageError("give exactly one of --fan, --builder, --product");
  if (!f.fan_file.empty()) return parse_fan_file(f.fan_file, FanOptions{!f.trust_input});
  if (!f.builder.empty()) return fan_from_spec(f.builder);
  return product(fan_from_spec(f.product_specs[0]), fan_from_spec(f.product_specs[1]));
}

std::optional<Cone> parse_elim_cone(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<RayIndex> rays;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    RayIndex v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw UsageError("bad --elim-cone '" + text + "': expected comma-separated ray indices");
    rays.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Cone(std::move(rays));
}

void print_presentation(const Fan& fan, const ChowPresentation& p, const Flags& f, std::ostream& out) {
  const auto substitution = eliminated_substitution(p);
  if (f.json) {
    nlohmann::json subs = nlohmann::json::object();
    for (const auto& [i, form] : substitution) subs["x" + std::to_string(i)] = render_polynomial(form);
    nlohmann::json nonfaces = nlohmann::json::array();
    for (const Cone& c : p.nonfaces()) nonfaces.push_back(render_polynomial(GradedClass::monomial(Monomial::squarefree(c.rays()))));
    nlohmann::json bases = nlohmann::json::array();
    for (std::size_t d = 0; d <= p.dim(); ++d) {
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& m : p.degree_basis(d)) basis.push_back(render_polynomial(GradedClass::monomial(m)));
      bases.push_back(std::move(basis));
    }
    out << nlohmann::json{{"fan", fan.name()},
                          {"elim_cone", std::vector<RayIndex>(p.elim_cone().rays().begin(), p.elim_cone().rays().end())},
                          {"kept_variables", std::vector<RayIndex>(p.kept_variables().begin(), p.kept_variables().end())},
                          {"substitution", subs},
                          {"stanley_reisner", nonfaces},
                          {"graded_dimensions", p.graded_dimensions()},
                          {"bases", bases}}
               .dump(2)
        << '\n';
    return;
  }
  out << "fan: " << fan.name() << '\n' << "elimination cone:";
  for (RayIndex i : p.elim_cone().rays()) out << " x" << i;
  out << "\nkept variables:";
  for (RayIndex i : p.kept_variables()) out << " x" << i;
  out << '\n';
  for (const auto& [i, form] : substitution) out << "  x" << i << " = " << render_polynomial(form) << '\n';
  out << "Stanley-Reisner generators:";
  for (const Cone& c : p.nonfaces()) out << ' ' << render_polynomial(GradedClass::monomial(Monomial::squarefree(c.rays())));
  out << "\ngraded dimensions:";
  for (std::size_t d : p.graded_dimensions()) out << ' ' << d;
  out << '\n';
  for (std::size_t d = 0; d <= p.dim(); ++d) {
    out << "basis in degree " << d << ':';
    for (const auto& m : p.degree_basis(d)) out << ' ' << render_polynomial(GradedClass::monomial(m));
    out << '\n';
  }
}

struct Check {
  std::string name;
  bool ok;
  bool structural;  // failure means bad input rather than a library inconsistency
};

int run_validate(const Fan& fan, const Flags& f, std::ostream& out) {
  std::vector<Check> checks;
  checks.push_back({"wall condition (each wall in exactly two maximal cones)", wall_check(fan), true});
  bool simplicial = true;
  for (const Cone& c : fan.max_cones()) {
    try {
      (void)fan.multiplicity(c);
    } catch (const InputError&) {
      simplicial = false;
    }
  }
  checks.push_back({"maximal cones simplicial", simplicial, true});

  std::optional<ChowPresentation> p;
  try {
    p.emplace(ChowPresentation::build(fan));
    checks.push_back({"top graded piece one-dimensional", true, true});
  } catch (const InputError&) {
    checks.push_back({"top graded piece one-dimensional", false, true});
  }

  if (p) {
    const auto dims = p->graded_dimensions();
    std::size_t total = 0;
    for (std::size_t d : dims) total += d;
    checks.push_back({"graded dimensions sum to the maximal cone count", total == fan.max_cones().size(), false});

    const Integer by_count = euler_by_cone_count(fan);
    const Integer fast = euler_characteristic(fan, *p, true);
    const CsmResult full = compute_csm(fan, *p, CsmOptions{true, f.threads});
    checks.push_back({"euler agrees across maximal-cone path, full class and cone count",
                      fast == by_count && full.euler == by_count, false});

    const std::uint64_t seed = f.seed.value_or(1);
    std::mt19937_64 rng(seed);
    std::vector<Cone> candidates = fan.cones(fan.ambient_dim());
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(std::min<std::size_t>(candidates.size(), 5));
    bool same = true;
    for (const Cone& elim : candidates) {
      const auto q = ChowPresentation::build(fan, elim);
      same = same && q.graded_dimensions() == dims && compute_csm(fan, q, CsmOptions{false, f.threads}).euler == full.euler;
      for (const Cone& sigma : fan.cones(fan.ambient_dim())) {
        const auto point = GradedClass::monomial(Monomial::squarefree(sigma.rays()));
        same = same && q.degree(q.normal_form(point)) == p->degree(p->normal_form(point));
      }
    }
    checks.push_back({"presentation independent of " + std::to_string(candidates.size()) +
                          " random elimination cones (seed " + std::to_string(seed) + ")",
                      same, false});
  }

  bool structural_failure = false, internal_failure = false;
  for (const auto& c : checks) {
    if (c.ok) continue;
    (c.structural ? structural_failure : internal_failure) = true;
  }
  if (f.json) {
    nlohmann::json doc = {{"fan", fan.name()}, {"valid", !structural_failure && !internal_failure}};
    for (const auto& c : checks) doc["checks"].push_back({{"check", c.name}, {"ok", c.ok}});
    out << doc.dump(2) << '\n';
  } else {
    out << "fan: " << fan.name() << '\n';
    for (const auto& c : checks) out << (c.ok ? "ok    " : "FAIL  ") << c.name << '\n';
    out << "note: completeness is checked through the wall condition only\n";
  }
  if (structural_failure) return kInvalidInput;
  if (internal_failure) return kInternal;
  return kSuccess;
}

int dispatch(const std::string& command, const Flags& f, std::ostream& out) {
  if (command == "bench") {
    BenchOptions options{f.only, f.euler_only, f.threads};
    const auto rows = run_bench(options);
    if (f.json)
      out << render_bench_json(rows).dump(2) << '\n';
    else
      render_bench_text(rows, out);
    return kSuccess;
  }

  Fan fan = load_fan(f);
  if (command == "validate") return run_validate(fan, f, out);

  const auto elim = parse_elim_cone(f.elim_cone);
  const CsmOptions csm{f.force_hnf, f.threads};
  if (command == "chow") {
    print_presentation(fan, ChowPresentation::build(fan, elim), f, out);
    return kSuccess;
  }
  if (command == "euler") {
    const Integer chi = euler_characteristic(fan, ChowPresentation::build(fan, elim), true, csm);
    if (f.json)
      out << nlohmann::json{{"euler", integer_json(chi)}}.dump() << '\n';
    else
      out << chi.get_str() << '\n';
    return kSuccess;
  }
  const OutputReport report = make_report(fan, ReportOptions{elim, f.euler_only, csm});
  if (f.json)
    out << render_json(report).dump(2) << '\n';
  else
    render_text(report, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-Schwartz-MacPherson classes and Euler characteristics of complete simplicial toric varieties",
               "toric-csm"};
  app.require_subcommand(1);
  Flags f;

  auto* csm = app.add_subcommand("csm", "Print the c_SM class, Euler characteristic and a fan summary");
  add_fan_source(*csm, f);
  csm->add_flag("--euler-only", f.euler_only, "Visit only maximal cones and report just the Euler characteristic");

  auto* euler = app.add_subcommand("euler", "Print only the Euler characteristic");
  add_fan_source(*euler, f);
  euler->add_flag("--euler-only", f.euler_only, "Accepted for symmetry; always on");

  auto* chow = app.add_subcommand("chow", "Print the Chow ring presentation and graded dimensions");
  add_fan_source(*chow, f);

  auto* validate = app.add_subcommand("validate", "Check the fan and the consistency of the computations");
  add_fan_source(*validate, f);
  validate->add_option("--seed", f.seed, "Seed for the random elimination-cone checks");

  for (auto* sub : {csm, euler, chow}) sub->add_option("--elim-cone", f.elim_cone, "Maximal cone to eliminate, i1,...,in");
  for (auto* sub : {csm, euler}) sub->add_flag("--force-hnf", f.force_hnf, "Compute every multiplicity by Hermite form");

  auto* bench = app.add_subcommand("bench", "Time the builder suite");
  bench->add_option("--only", f.only, "Builder spec to time instead of the default suite (repeatable; pn=5*pn=6 for products)");
  bench->add_flag("--euler-only", f.euler_only, "Skip the full-class columns");
  bench->add_option("--threads", f.threads, "Worker threads for multiplicities (0 = all cores)");
  bench->add_flag("--json", f.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const int code = dispatch(command, f, out);
    if (code != kSuccess) err << "error: " << command << " checks failed\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace toric::cli
