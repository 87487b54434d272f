#include "toric/csm.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "toric/error.hpp"

namespace toric {
namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned workers = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t useful = jobs / 32 + 1;
  return static_cast<unsigned>(std::min<std::size_t>(workers, useful));
}

// Multiplicities of fan.cones(d), index-aligned with that table.
std::vector<Integer> multiplicities(const Fan& fan, std::size_t d, bool unit, unsigned threads) {
  const auto& cones = fan.cones(d);
  std::vector<Integer> out(cones.size(), 1);
  if (unit) return out;

  const unsigned workers = worker_count(threads, cones.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cones.size(); ++i) out[i] = fan.multiplicity(cones[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < cones.size(); i += workers) out[i] = fan.multiplicity(cones[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Walk {
  const Fan& fan;
  const ChowPresentation& presentation;
  const std::vector<std::vector<Integer>>& mults;
  std::vector<ChowPresentation::KeptPolynomial>& sums;

  // Visits every cone once in lexicographic preorder; the product for a
  // cone extends the product of its prefix by one variable.
  void visit(std::vector<RayIndex>& prefix, const std::vector<std::size_t>& containing,
             const ChowPresentation::KeptPolynomial& product) const {
    const RayIndex first = prefix.empty() ? 0 : prefix.back() + 1;
    std::vector<std::size_t> next;
    for (RayIndex j = first; j < fan.ray_count(); ++j) {
      const auto incident = fan.max_cones_containing(j);
      next.clear();
      std::set_intersection(containing.begin(), containing.end(), incident.begin(), incident.end(),
                            std::back_inserter(next));
      if (next.empty()) continue;
      prefix.push_back(j);
      const std::size_t d = prefix.size();
      const auto index = fan.find_cone(prefix);
      if (!index) throw InternalError("face walk left the cone table");
      auto extended = presentation.times_variable(product, j);
      ChowPresentation::accumulate(sums[d], extended, Rational(mults[d][*index]));
      if (d < fan.ambient_dim()) visit(prefix, next, extended);
      prefix.pop_back();
    }
  }
};

Integer to_integer_euler(const Rational& degree) {
  if (degree.get_den() != 1) throw InternalError("inconsistent fan data: degree " + degree.get_str() + " is not an integer");
  return degree.get_num();
}

}  // namespace

bool smooth_fast_path(const Fan& fan) { return is_smooth(fan); }

CsmResult compute_csm(const Fan& fan, const ChowPresentation& presentation, const CsmOptions& options) {
  const std::size_t n = fan.ambient_dim();
  const bool unit = !options.force_hnf && smooth_fast_path(fan);

  std::vector<std::vector<Integer>> mults(n + 1);
  for (std::size_t d = 1; d <= n; ++d) mults[d] = multiplicities(fan, d, unit, options.threads);

  std::vector<ChowPresentation::KeptPolynomial> sums;
  for (std::uint32_t d = 0; d <= n; ++d) sums.push_back(presentation.zero(d));
  sums[0] = presentation.one();  // trivial cone: [V(0)] = [X]

  std::vector<std::size_t> all(fan.max_cones().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<RayIndex> prefix;
  Walk{fan, presentation, mults, sums}.visit(prefix, all, presentation.one());

  CsmResult result;
  for (std::size_t d = 0; d <= n; ++d) {
    GradedClass piece = presentation.reduce(sums[d]);
    result.csm_class += piece;
    result.per_dim_contributions.emplace(d, std::move(piece));
  }
  result.euler = to_integer_euler(presentation.degree(result.csm_class));
  return result;
}

GradedClass csm_class(const Fan& fan, const ChowPresentation& presentation, const CsmOptions& options) {
  return compute_csm(fan, presentation, options).csm_class;
}

Integer euler_characteristic(const Fan& fan, const ChowPresentation& presentation, bool euler_only,
                             const CsmOptions& options) {
  if (!euler_only) return compute_csm(fan, presentation, options).euler;

  const std::size_t n = fan.ambient_dim();
  const bool unit = !options.force_hnf && smooth_fast_path(fan);
  const std::vector<Integer> mults = multiplicities(fan, n, unit, options.threads);
  const auto& top_cones = fan.cones(n);

  auto total = presentation.zero(static_cast<std::uint32_t>(n));
  for (std::size_t c = 0; c < top_cones.size(); ++c) {
    auto product = presentation.one();
    for (RayIndex i : top_cones[c].rays()) product = presentation.times_variable(product, i);
    ChowPresentation::accumulate(total, product, Rational(mults[c]));
  }
  return to_integer_euler(presentation.degree(presentation.reduce(total)));
}

Integer euler_characteristic(const Fan& fan, bool euler_only, const CsmOptions& options) {
  return euler_characteristic(fan, ChowPresentation::build(fan), euler_only, options);
}

Integer euler_by_cone_count(const Fan& fan) { return Integer(static_cast<unsigned long>(fan.max_cones().size())); }

}  // namespace toric
