#include "toric/builders.hpp"

#include <numeric>

#include "toric/error.hpp"

namespace toric {
namespace {

LatticeVector unit_vector(std::size_t n, std::size_t i) {
  LatticeVector v(n, 0);
  v[i] = 1;
  return v;
}

// All k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<RayIndex>> subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<RayIndex>> out;
  std::vector<RayIndex> current(k);
  std::iota(current.begin(), current.end(), RayIndex{0});
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace

Fan projective_space(std::size_t n) {
  if (n == 0) throw InputError("projective space needs dimension at least 1");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  rays.emplace_back(n, -1);
  Fan fan = build_fan(n, std::move(rays), subsets(n + 1, n));
  fan.set_name("P^" + std::to_string(n));
  return fan;
}

Fan hirzebruch(std::uint64_t r) {
  std::vector<LatticeVector> rays = {
      {1, 0}, {0, 1}, {-1, Integer(std::to_string(r))}, {0, -1}};
  Fan fan = build_fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  fan.set_name("H_" + std::to_string(r));
  return fan;
}

Fan weighted_projective(std::span<const std::int64_t> weights) {
  if (weights.size() < 2) throw InputError("unsupported weights: need at least two weights");
  Integer g = 0;
  for (auto q : weights) {
    if (q <= 0) throw InputError("unsupported weights: weights must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(static_cast<long>(q)).get_mpz_t());
  }
  if (g != 1) throw InputError("unsupported weights: gcd of weights must be 1");

  const std::size_t n = weights.size() - 1;
  const Integer q0 = static_cast<long>(weights[0]);
  LatticeVector v0(n);
  Integer content = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer qi = static_cast<long>(weights[i + 1]);
    if (!mpz_divisible_p(qi.get_mpz_t(), q0.get_mpz_t()))
      throw InputError("unsupported weights: first ray is not integral");
    v0[i] = -qi / q0;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v0[i].get_mpz_t());
  }
  if (content != 1) throw InputError("unsupported weights: first ray is not primitive");

  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  rays.push_back(std::move(v0));
  Fan fan = build_fan(n, std::move(rays), subsets(n + 1, n));

  std::string name = "P(";
  for (std::size_t i = 0; i < weights.size(); ++i) name += (i ? "," : "") + std::to_string(weights[i]);
  fan.set_name(name + ")");
  return fan;
}

Fan product(const Fan& first, const Fan& second) {
  const std::size_t n1 = first.ambient_dim();
  const std::size_t n2 = second.ambient_dim();
  const auto offset = static_cast<RayIndex>(first.ray_count());

  std::vector<LatticeVector> rays;
  rays.reserve(first.ray_count() + second.ray_count());
  for (const auto& v : first.rays()) {
    LatticeVector padded = v;
    padded.resize(n1 + n2, 0);
    rays.push_back(std::move(padded));
  }
  for (const auto& v : second.rays()) {
    LatticeVector padded(n1, 0);
    padded.insert(padded.end(), v.begin(), v.end());
    rays.push_back(std::move(padded));
  }

  std::vector<std::vector<RayIndex>> cones;
  cones.reserve(first.max_cones().size() * second.max_cones().size());
  for (const Cone& a : first.max_cones()) {
    for (const Cone& b : second.max_cones()) {
      std::vector<RayIndex> joined(a.rays().begin(), a.rays().end());
      for (RayIndex i : b.rays()) joined.push_back(i + offset);
      cones.push_back(std::move(joined));
    }
  }
  Fan fan = build_fan(n1 + n2, std::move(rays), cones);
  fan.set_name(first.name() + " x " + second.name());
  return fan;
}

}  // namespace toric
