// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Reference values come from the oracles in
// support/oracles.hpp or from closed forms computed here.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "toric/builders.hpp"
#include "toric/chow.hpp"
#include "toric/cli/app.hpp"
#include "toric/cli/polynomial.hpp"
#include "toric/csm.hpp"
#include "toric/error.hpp"

namespace {

using namespace toric;
using Clock = std::chrono::steady_clock;
using Weights = std::vector<std::int64_t>;

// Wall-clock ceilings in seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kProjectiveLimit = 10.0;
constexpr double kP6Limit = 10.0;
constexpr double kP5xP6ForcedLimit = 120.0;
constexpr double kP16EulerLimit = 5.0;

constexpr std::size_t kRandomHnfCases = 1200;
constexpr std::size_t kMinElimCones = 3;
constexpr std::size_t kMaxOracleRays = 6;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct CliRun {
  int code;
  std::string out;
  double seconds;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str(), seconds_since(start)};
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

// Binomial coefficients from Pascal's rule.
std::vector<std::vector<Integer>> pascal(std::size_t rows) {
  std::vector<std::vector<Integer>> t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

std::vector<Fan> base_suite() {
  std::vector<Fan> fans;
  for (std::size_t n = 1; n <= 8; ++n) fans.push_back(projective_space(n));
  fans.push_back(product(projective_space(5), projective_space(6)));
  for (std::uint64_t r = 0; r <= 10; ++r) fans.push_back(hirzebruch(r));
  for (std::int64_t q = 1; q <= 5; ++q) fans.push_back(weighted_projective(Weights{1, 1, q}));
  return fans;
}

// Factors for the pairwise products: the low-dimensional members of the
// base suite.
std::vector<Fan> product_factors() {
  std::vector<Fan> fans;
  for (std::size_t n = 1; n <= 3; ++n) fans.push_back(projective_space(n));
  for (std::uint64_t r : {0u, 1u, 5u, 10u}) fans.push_back(hirzebruch(r));
  for (std::int64_t q = 1; q <= 5; ++q) fans.push_back(weighted_projective(Weights{1, 1, q}));
  return fans;
}

const std::vector<Fan>& full_suite() {
  static const std::vector<Fan> fans = [] {
    auto out = base_suite();
    const auto factors = product_factors();
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i; j < factors.size(); ++j) out.push_back(product(factors[i], factors[j]));
    return out;
  }();
  return fans;
}

std::string c1() {
  const auto r = cli({"csm", "--builder", "hirzebruch=5", "--elim-cone", "0,3"});
  require(r.code == 0, "exit status " + std::to_string(r.code) + ": " + r.out);
  const std::string line = "c_SM = 1 + 2*x1 + 7*x2 + 4*x1*x2\n";
  require(r.out.find(line) != std::string::npos, "class line missing from:\n" + r.out);
  require(r.out.find("euler = 4\n") != std::string::npos, "euler line missing");

  GradedClass expected = GradedClass::constant(1);
  expected.add(Monomial::variable(1), 2);
  expected.add(Monomial::variable(2), 7);
  expected.add(Monomial::variable(1) * Monomial::variable(2), 4);
  const auto begin = r.out.find("c_SM = ") + 7;
  const auto parsed = cli::parse_polynomial(r.out.substr(begin, r.out.find('\n', begin) - begin));
  require(parsed == expected, "parsed class differs");
  require(r.seconds < kGoldenLimit, "took " + fmt_seconds(r.seconds));
  return "c_SM = 1 + 2*x1 + 7*x2 + 4*x1*x2, euler 4, " + fmt_seconds(r.seconds);
}

std::string c2() {
  const auto binom = pascal(9);
  const auto start = Clock::now();
  for (std::size_t n = 1; n <= 8; ++n) {
    const Fan fan = projective_space(n);
    const auto p = build_presentation(fan);
    require(p.kept_variables().size() == 1, "P^" + std::to_string(n) + " keeps more than one variable");
    const RayIndex h = p.kept_variables()[0];
    const CsmResult result = compute_csm(fan, p);
    for (std::size_t d = 0; d <= n; ++d) {
      const Rational c = result.csm_class.coefficient(Monomial::variable(h, static_cast<std::uint32_t>(d)));
      require(c == Rational(binom[n + 1][d]), "P^" + std::to_string(n) + " degree " + std::to_string(d) + " coefficient " +
                                                  c.get_str());
      // Cone-count cross-check: C(n+1, d) cones of dimension d, each h^d.
      if (d > 0)
        require(Integer(oracle::brute_force_cones(fan)[d].size()) == binom[n + 1][d], "cone count mismatch");
    }
    require(result.csm_class.size() == n + 1, "unexpected extra terms");
    require(result.euler == static_cast<unsigned long>(n + 1), "euler of P^" + std::to_string(n));
  }
  const double t = seconds_since(start);
  require(t < kProjectiveLimit, "took " + fmt_seconds(t));
  return "n = 1..8 binomial coefficients and euler n+1, " + fmt_seconds(t);
}

std::string c3() {
  std::size_t count = 0;
  for (const Fan& fan : full_suite()) {
    const auto p = build_presentation(fan);
    const Integer cones = oracle::brute_force_cones(fan).rbegin()->second.size();
    const Integer fast = euler_characteristic(fan, p, true);
    const Integer fast_forced = euler_characteristic(fan, p, true, CsmOptions{true, 0});
    const Integer full = euler_characteristic(fan, p, false);
    const Integer full_forced = euler_characteristic(fan, p, false, CsmOptions{true, 0});
    const Integer by_count = euler_by_cone_count(fan);
    require(fast == full && full == full_forced && fast_forced == fast && by_count == fast && cones == by_count,
            fan.name() + ": " + fast.get_str() + " " + fast_forced.get_str() + " " + full.get_str() + " " +
                full_forced.get_str() + " " + by_count.get_str());
    ++count;
  }
  return std::to_string(count) + " fans including pairwise products";
}

std::string c4() {
  std::string detail;
  for (std::int64_t q : {2, 3}) {
    const Fan fan = weighted_projective(Weights{1, 1, q});
    std::vector<Integer> mults, oracle_mults;
    for (const Cone& c : fan.max_cones()) {
      mults.push_back(fan.multiplicity(c));
      oracle_mults.push_back(abs(oracle::leibniz_determinant(fan.generator_matrix(c.rays()))));
    }
    std::sort(mults.begin(), mults.end());
    std::sort(oracle_mults.begin(), oracle_mults.end());
    require(mults == oracle_mults, fan.name() + " multiplicities differ from determinants");
    require(mults == std::vector<Integer>{1, 1, q}, fan.name() + " multiset");
    const Integer chi = compute_csm(fan, build_presentation(fan), CsmOptions{true, 0}).euler;
    require(chi == 3, fan.name() + " euler " + chi.get_str());
    detail += fan.name() + " {1,1," + std::to_string(q) + "} euler 3; ";
  }
  detail.resize(detail.size() - 2);
  return detail;
}

bool hermite_shape(const IntegerMatrix& h) {
  const std::size_t d = h.cols();
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < d && j < i; ++j)
      if (h(i, j) != 0) return false;
  for (std::size_t j = 0; j < d; ++j) {
    if (h(j, j) <= 0) return false;
    for (std::size_t i = 0; i < j; ++i)
      if (h(i, j) < 0 || h(i, j) >= h(j, j)) return false;
  }
  return true;
}

std::string c5() {
  std::mt19937_64 rng(20240611);
  std::size_t square = 0;
  for (std::size_t trial = 0; trial < kRandomHnfCases; ++trial) {
    const std::size_t d = 1 + rng() % 6;
    const std::size_t n = d + rng() % (7 - d);
    const IntegerMatrix m = oracle::random_full_rank(rng, n, d, -20, 20);
    const auto form = hermite_normal_form(m);
    const std::string where = "case " + std::to_string(trial) + " (" + std::to_string(n) + "x" + std::to_string(d) + ")";
    require(form.transform * m == form.hnf, where + ": U*M != [H; 0]");
    require(abs(oracle::leibniz_determinant(form.transform)) == 1, where + ": transform not unimodular");
    require(hermite_shape(form.hnf), where + ": not in Hermite form");
    require(hermite_normal_form(form.hnf).hnf == form.hnf, where + ": not idempotent");
    const IntegerMatrix block = strip_zero_rows(form.hnf);
    require(block.rows() == d, where + ": block not square");
    require(abs(determinant(block)) == oracle::lattice_index(m), where + ": block determinant is not the lattice index");
    if (n == d) {
      require(abs(determinant(block)) == abs(determinant(m)), where + ": |det| differs from Bareiss");
      require(abs(determinant(m)) == abs(oracle::leibniz_determinant(m)), where + ": Bareiss differs from Leibniz");
      ++square;
    }
  }
  return std::to_string(kRandomHnfCases) + " matrices, " + std::to_string(square) + " square";
}

std::string c6() {
  std::size_t count = 0;
  for (const Fan& fan : full_suite()) {
    if (fan.ray_count() > kMaxOracleRays) continue;
    const auto dims = build_presentation(fan).graded_dimensions();
    const auto expected = oracle::brute_force_graded_dimensions(fan);
    require(dims == expected, fan.name() + " graded dimensions differ from the brute-force quotient");
    ++count;
  }
  require(count > 0, "no fans with few rays");
  return std::to_string(count) + " fans with <= 6 rays";
}

std::string c7() {
  for (const Fan& fan : full_suite()) {
    const auto dims = build_presentation(fan).graded_dimensions();
    std::size_t total = 0;
    for (std::size_t d : dims) total += d;
    require(total == fan.max_cones().size(), fan.name() + " sum " + std::to_string(total));
  }
  return std::to_string(full_suite().size()) + " fans";
}

std::string c8() {
  std::mt19937_64 rng(8);
  std::size_t fans = 0, presentations = 0, exhausted = 0;
  for (const Fan& fan : full_suite()) {
    const std::size_t n = fan.ambient_dim();
    std::vector<Cone> elims = fan.cones(n);
    std::shuffle(elims.begin(), elims.end(), rng);
    elims.resize(std::min<std::size_t>(elims.size(), 4));
    // A fan with fewer maximal cones than kMinElimCones uses all of them.
    if (elims.size() < kMinElimCones) ++exhausted;
    require(elims.size() >= std::min(kMinElimCones, fan.max_cones().size()), fan.name() + ": too few elimination cones");

    // Top-degree test monomials: every maximal cone plus random words.
    std::vector<Monomial> probes;
    for (const Cone& c : fan.max_cones()) probes.push_back(Monomial::squarefree(c.rays()));
    for (int k = 0; k < 10; ++k) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < n; ++i) f.emplace_back(static_cast<RayIndex>(rng() % fan.ray_count()), 1);
      probes.push_back(Monomial::from_factors(f));
    }

    std::optional<std::vector<std::size_t>> dims;
    std::optional<Integer> chi;
    std::vector<Rational> degrees;
    for (const Cone& elim : elims) {
      const auto p = build_presentation(fan, elim);
      std::vector<Rational> these;
      for (const auto& m : probes) these.push_back(p.degree(p.normal_form(GradedClass::monomial(m))));
      const Integer e = compute_csm(fan, p).euler;
      if (!dims) {
        dims = p.graded_dimensions();
        chi = e;
        degrees = these;
      }
      require(p.graded_dimensions() == *dims, fan.name() + ": graded dimensions depend on the elimination cone");
      require(e == *chi, fan.name() + ": euler depends on the elimination cone");
      require(these == degrees, fan.name() + ": degrees depend on the elimination cone");
      ++presentations;
    }
    ++fans;
  }
  return std::to_string(fans) + " fans, " + std::to_string(presentations) + " presentations, " +
         std::to_string(exhausted) + " fans with fewer than 3 maximal cones used all of them";
}

std::string c9() {
  const auto p6 = cli({"csm", "--builder", "pn=6"});
  require(p6.code == 0 && p6.out.find("euler = 7\n") != std::string::npos, "csm pn=6 failed: " + p6.out);
  require(p6.seconds < kP6Limit, "csm pn=6 took " + fmt_seconds(p6.seconds));

  const auto prod = cli({"csm", "--product", "pn=5", "pn=6", "--force-hnf"});
  require(prod.code == 0 && prod.out.find("euler = 42\n") != std::string::npos, "P^5 x P^6 failed: " + prod.out);
  require(prod.seconds < kP5xP6ForcedLimit, "P^5 x P^6 forced took " + fmt_seconds(prod.seconds));

  const auto p16 = cli({"euler", "--builder", "pn=16"});
  require(p16.code == 0 && p16.out == "17\n", "euler pn=16 failed: " + p16.out);
  require(p16.seconds < kP16EulerLimit, "euler pn=16 took " + fmt_seconds(p16.seconds));

  return "pn=6 " + fmt_seconds(p6.seconds) + ", P^5 x P^6 forced " + fmt_seconds(prod.seconds) + ", P^16 euler " +
         fmt_seconds(p16.seconds);
}

std::string c10() {
  std::size_t smooth = 0;
  for (const Fan& suite_fan : full_suite()) {
    if (!smooth_fast_path(suite_fan)) continue;
    const auto p = build_presentation(suite_fan);
    const CsmResult fast = compute_csm(suite_fan, p, CsmOptions{false, 0});
    const CsmResult forced = compute_csm(suite_fan, p, CsmOptions{true, 0});
    require(fast == forced, suite_fan.name() + ": fast path and forced Hermite path differ");
    ++smooth;
  }
  require(smooth > 0, "no smooth fans in the suite");
  return std::to_string(smooth) + " smooth fans";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1 hirzebruch golden", c1},
      {"2 projective spaces", c2},
      {"3 euler consistency", c3},
      {"4 singular multiplicities", c4},
      {"5 hermite property suite", c5},
      {"6 quotient oracle", c6},
      {"7 h-vector identity", c7},
      {"8 basis independence", c8},
      {"9 performance envelope", c9},
      {"10 smooth fast path", c10},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
