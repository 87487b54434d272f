#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// A monomial in the ray variables x_0, ..., x_{r-1}.
class Monomial {
 public:
  using Factor = std::pair<RayIndex, std::uint32_t>;  // (variable, exponent > 0)

  Monomial() = default;  // the constant monomial 1

  static Monomial variable(RayIndex i, std::uint32_t power = 1);
  static Monomial squarefree(std::span<const RayIndex> variables);
  /// Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(RayIndex i) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;  // sorted by variable
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with x_0 > x_1 > ... : higher degree wins,
/// then the larger exponent at the first variable where the two differ.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Ascending degree, then descending grlex inside a degree. Used for
/// storage and rendering so output is stable.
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grlex_greater(a, b);
  }
};

/// Sparse element of Q[x_0..x_{r-1}]; zero coefficients are never stored.
class GradedClass {
 public:
  using Terms = std::map<Monomial, Rational, DisplayOrder>;

  GradedClass() = default;
  static GradedClass constant(const Rational& value);
  static GradedClass monomial(const Monomial& m, const Rational& coefficient = 1);

  void add(const Monomial& m, const Rational& coefficient);
  Rational coefficient(const Monomial& m) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Homogeneous component of the given degree.
  GradedClass part(std::uint32_t degree) const;
  std::optional<std::uint32_t> max_degree() const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator*=(const Rational& scale);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  bool operator==(const GradedClass& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

/// Minimal subsets of rays that do not lie in a common maximal cone,
/// in lexicographic order. Their squarefree products generate the
/// Stanley-Reisner ideal.
std::vector<Cone> stanley_reisner_nonfaces(const Fan& fan);

/// The n linear forms sum_j (v_j)_k x_j, k = 0..n-1; form k has one
/// coefficient per ray.
std::vector<std::vector<Integer>> linear_relations(const Fan& fan);

/// Rational Chow ring Q[x_0..x_{r-1}] / (I + J) of a complete simplicial fan.
///
/// The n variables of one maximal cone (the elimination cone) are solved
/// from the linear relations, leaving a polynomial ring in the r - n kept
/// variables modulo the substituted Stanley-Reisner ideal. Each graded piece
/// of that quotient is computed by exact row reduction; its basis consists
/// of the monomials that are not leading terms of the ideal under
/// grlex_greater.
class ChowPresentation {
 public:
  /// Polynomial in the kept variables, homogeneous of one degree, stored
  /// densely against the degree's monomial table.
  struct KeptPolynomial {
    std::uint32_t degree = 0;
    std::vector<Rational> coefficients;
  };

  struct Calibration {
    Cone reference;           // lexicographically smallest maximal cone
    Rational coefficient;     // normal_form(prod x_i over reference) = coefficient * top basis monomial
    Integer multiplicity;     // mult(reference)
  };

  /// Builds the presentation; `elim_cone` must be a maximal cone of `fan`
  /// and defaults to the lexicographically smallest one.
  ///
  /// Throws InputError("fan not complete") if the top graded piece is not
  /// one-dimensional.
  static ChowPresentation build(const Fan& fan, std::optional<Cone> elim_cone = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t ray_count() const noexcept { return substitution_.size(); }

  const std::vector<Cone>& nonfaces() const noexcept { return nonfaces_; }
  const std::vector<std::vector<Integer>>& linear_forms() const noexcept { return linear_forms_; }
  const Cone& elim_cone() const noexcept { return elim_cone_; }
  std::span<const RayIndex> kept_variables() const noexcept { return kept_; }

  /// x_i written over kept_variables(); a kept variable maps to a unit vector.
  std::span<const Rational> substitution(RayIndex i) const { return substitution_.at(i); }

  /// Basis monomials of degree d in descending grlex order, 0 <= d <= n.
  const std::vector<Monomial>& degree_basis(std::size_t d) const { return degrees_.at(d).basis_monomials; }
  std::vector<std::size_t> graded_dimensions() const;

  const Calibration& calibration() const noexcept { return calibration_; }

  /// Canonical representative over the degree bases. Linear; pieces of
  /// degree above n vanish.
  GradedClass normal_form(const GradedClass& c) const;

  /// Degree of the top-dimensional part of a normal form; a point class
  /// has degree 1.
  Rational degree(const GradedClass& normal_form) const;

  KeptPolynomial one() const;
  KeptPolynomial zero(std::uint32_t degree) const;
  /// p * x_ray after substitution. Requires p.degree < n.
  KeptPolynomial times_variable(const KeptPolynomial& p, RayIndex ray) const;
  /// into += scale * p; both of the same degree.
  static void accumulate(KeptPolynomial& into, const KeptPolynomial& p, const Rational& scale);
  /// Normal form of a kept polynomial as a class over basis monomials.
  GradedClass reduce(const KeptPolynomial& p) const;

 private:
  struct DegreeTable {
    std::vector<std::vector<std::uint32_t>> exponents;  // kept-variable exponent vectors, descending grlex
    std::vector<std::vector<std::size_t>> times_kept;   // [monomial][u] -> index one degree up
    std::vector<std::size_t> basis_columns;
    std::vector<Monomial> basis_monomials;
    // Per monomial: coordinates over the basis. Empty for monomials in the ideal.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> reduction;
  };

  ChowPresentation() = default;
  Monomial to_ray_monomial(const std::vector<std::uint32_t>& exponents) const;

  std::size_t dim_ = 0;
  std::vector<Cone> nonfaces_;
  std::vector<std::vector<Integer>> linear_forms_;
  Cone elim_cone_;
  std::vector<RayIndex> kept_;
  std::vector<std::vector<Rational>> substitution_;
  std::vector<DegreeTable> degrees_;
  Calibration calibration_;
};

inline ChowPresentation build_presentation(const Fan& fan, std::optional<Cone> elim_cone = std::nullopt) {
  return ChowPresentation::build(fan, std::move(elim_cone));
}

inline std::vector<std::size_t> graded_dimensions(const ChowPresentation& p) { return p.graded_dimensions(); }

inline GradedClass normal_form(const GradedClass& c, const ChowPresentation& p) { return p.normal_form(c); }

inline Rational degree(const GradedClass& c, const ChowPresentation& p) { return p.degree(c); }

}  // namespace toric
