#include "toric/chow.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(RayIndex i, std::uint32_t power) {
  Monomial m;
  if (power > 0) {
    m.factors_.emplace_back(i, power);
    m.degree_ = power;
  }
  return m;
}

Monomial Monomial::squarefree(std::span<const RayIndex> variables) {
  std::vector<Factor> factors;
  factors.reserve(variables.size());
  for (RayIndex i : variables) factors.emplace_back(i, 1);
  return from_factors(std::move(factors));
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [var, power] : factors) {
    if (power == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == var)
      m.factors_.back().second += power;
    else
      m.factors_.emplace_back(var, power);
    m.degree_ += power;
  }
  return m;
}

std::uint32_t Monomial::exponent(RayIndex i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{i, 0});
  return (it != factors_.end() && it->first == i) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Factor> merged(factors_);
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  return from_factors(std::move(merged));
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto fa = a.factors();
  const auto fb = b.factors();
  std::size_t i = 0;
  while (i < fa.size() && i < fb.size()) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;  // a has the smaller variable
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    ++i;
  }
  // Equal degrees force equal monomials once one side runs out.
  return false;
}

// ---------------------------------------------------------------------------
// GradedClass

GradedClass GradedClass::constant(const Rational& value) { return monomial(Monomial{}, value); }

GradedClass GradedClass::monomial(const Monomial& m, const Rational& coefficient) {
  GradedClass c;
  c.add(m, coefficient);
  return c;
}

void GradedClass::add(const Monomial& m, const Rational& value) {
  if (value == 0) return;
  Rational coefficient = value;
  coefficient.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Rational GradedClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::part(std::uint32_t degree) const {
  GradedClass out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::optional<std::uint32_t> GradedClass::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  Rational s = scale;
  s.canonicalize();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Ideal data

namespace {

void find_nonfaces(const Fan& fan, std::vector<RayIndex>& prefix,
                   const std::vector<std::size_t>& containing, std::vector<Cone>& out) {
  const RayIndex first = prefix.empty() ? 0 : prefix.back() + 1;
  std::vector<std::size_t> next;
  std::vector<RayIndex> candidate;
  for (RayIndex j = first; j < fan.ray_count(); ++j) {
    const auto incident = fan.max_cones_containing(j);
    next.clear();
    std::set_intersection(containing.begin(), containing.end(), incident.begin(), incident.end(),
                          std::back_inserter(next));
    if (!next.empty()) {
      prefix.push_back(j);
      find_nonfaces(fan, prefix, next, out);
      prefix.pop_back();
      continue;
    }
    // prefix + {j} is not a face; it is minimal iff each facet obtained by
    // dropping a prefix element is a face (dropping j gives the prefix).
    bool minimal = true;
    for (std::size_t skip = 0; skip < prefix.size() && minimal; ++skip) {
      candidate.clear();
      for (std::size_t k = 0; k < prefix.size(); ++k)
        if (k != skip) candidate.push_back(prefix[k]);
      candidate.push_back(j);
      minimal = fan.is_cone(candidate);
    }
    if (minimal) {
      candidate.assign(prefix.begin(), prefix.end());
      candidate.push_back(j);
      out.emplace_back(candidate);
    }
  }
}

// Exponent vectors of total degree d in k variables, descending lex order.
void exponent_vectors(std::size_t k, std::uint32_t d, std::vector<std::uint32_t>& current,
                      std::vector<std::vector<std::uint32_t>>& out) {
  const std::size_t pos = current.size();
  if (pos + 1 == k) {
    current.push_back(d);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    current.push_back(e);
    exponent_vectors(k, d - e, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> exponent_vectors(std::size_t k, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> current;
  exponent_vectors(k, d, current, out);
  return out;
}

}  // namespace

std::vector<Cone> stanley_reisner_nonfaces(const Fan& fan) {
  std::vector<Cone> out;
  std::vector<std::size_t> all(fan.max_cones().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<RayIndex> prefix;
  find_nonfaces(fan, prefix, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Integer>> linear_relations(const Fan& fan) {
  std::vector<std::vector<Integer>> forms(fan.ambient_dim(), std::vector<Integer>(fan.ray_count()));
  for (std::size_t j = 0; j < fan.ray_count(); ++j)
    for (std::size_t k = 0; k < fan.ambient_dim(); ++k) forms[k][j] = fan.rays()[j][k];
  return forms;
}

// ---------------------------------------------------------------------------
// ChowPresentation

ChowPresentation ChowPresentation::build(const Fan& fan, std::optional<Cone> elim_cone) {
  const std::size_t n = fan.ambient_dim();
  const std::size_t r = fan.ray_count();

  ChowPresentation p;
  p.dim_ = n;
  p.nonfaces_ = stanley_reisner_nonfaces(fan);
  p.linear_forms_ = linear_relations(fan);

  if (elim_cone) {
    if (elim_cone->dim() != n || !fan.is_cone(elim_cone->rays()))
      throw InputError("elimination cone is not a maximal cone of the fan");
    p.elim_cone_ = std::move(*elim_cone);
  } else {
    p.elim_cone_ = fan.cones(n).front();
  }
  for (RayIndex i = 0; i < r; ++i)
    if (!p.elim_cone_.contains(i)) p.kept_.push_back(i);
  const std::size_t k = p.kept_.size();

  // Solve sum_t A[.,t] x_{e_t} = -sum_u B[.,u] x_{kept_u} via RREF of [A | -B].
  RationalMatrix system(n, n + k);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t t = 0; t < n; ++t) system(row, t) = p.linear_forms_[row][p.elim_cone_.rays()[t]];
    for (std::size_t u = 0; u < k; ++u) system(row, n + u) = -p.linear_forms_[row][p.kept_[u]];
  }
  const RowEchelon solved = rational_rref(std::move(system));
  if (solved.pivots.size() != n || (n > 0 && solved.pivots.back() != n - 1))
    throw InternalError("elimination cone has a singular ray matrix");

  p.substitution_.assign(r, std::vector<Rational>(k));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u < k; ++u) p.substitution_[p.elim_cone_.rays()[t]][u] = solved.reduced(t, n + u);
  for (std::size_t u = 0; u < k; ++u) p.substitution_[p.kept_[u]][u] = 1;

  // Monomial tables and multiplication maps.
  p.degrees_.resize(n + 1);
  std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> index(n + 1);
  for (std::uint32_t d = 0; d <= n; ++d) {
    p.degrees_[d].exponents = exponent_vectors(k, d);
    for (std::size_t i = 0; i < p.degrees_[d].exponents.size(); ++i) index[d].emplace(p.degrees_[d].exponents[i], i);
  }
  for (std::uint32_t d = 0; d < n; ++d) {
    auto& table = p.degrees_[d];
    table.times_kept.resize(table.exponents.size());
    for (std::size_t i = 0; i < table.exponents.size(); ++i) {
      table.times_kept[i].resize(k);
      for (std::size_t u = 0; u < k; ++u) {
        auto e = table.exponents[i];
        ++e[u];
        table.times_kept[i][u] = index[d + 1].at(e);
      }
    }
  }

  // Graded pieces of the substituted ideal, built degree by degree: the
  // degree-d part is spanned by (degree d-1 part) * x_u together with the
  // generators of degree d.
  std::vector<std::vector<Rational>> ideal_rows;
  for (std::uint32_t d = 0; d <= n; ++d) {
    auto& table = p.degrees_[d];
    const std::size_t cols = table.exponents.size();
    std::vector<std::vector<Rational>> rows;
    if (d > 0) {
      const auto& lower = p.degrees_[d - 1];
      for (const auto& row : ideal_rows) {
        for (std::size_t u = 0; u < k; ++u) {
          std::vector<Rational> shifted(cols);
          for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) shifted[lower.times_kept[c][u]] = row[c];
          rows.push_back(std::move(shifted));
        }
      }
    }
    for (const Cone& s : p.nonfaces_) {
      if (s.dim() != d) continue;
      KeptPolynomial g = p.one();
      for (RayIndex i : s.rays()) g = p.times_variable(g, i);
      rows.push_back(std::move(g.coefficients));
    }

    std::vector<std::size_t> pivots;
    RationalMatrix reduced;
    if (!rows.empty()) {
      RationalMatrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = std::move(rows[i][c]);
      RowEchelon echelon = rational_rref(std::move(m));
      pivots = std::move(echelon.pivots);
      reduced = std::move(echelon.reduced);
    }

    std::vector<std::size_t> basis_position(cols, cols);
    {
      std::size_t next_pivot = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
          ++next_pivot;
          continue;
        }
        basis_position[c] = table.basis_columns.size();
        table.basis_columns.push_back(c);
        table.basis_monomials.push_back(p.to_ray_monomial(table.exponents[c]));
      }
    }

    table.reduction.assign(cols, {});
    for (std::size_t c : table.basis_columns) table.reduction[c].emplace_back(basis_position[c], 1);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      auto& coords = table.reduction[pivots[t]];
      for (std::size_t b : table.basis_columns)
        if (reduced(t, b) != 0) coords.emplace_back(basis_position[b], -reduced(t, b));
    }

    ideal_rows.assign(pivots.size(), std::vector<Rational>(cols));
    for (std::size_t t = 0; t < pivots.size(); ++t)
      for (std::size_t c = 0; c < cols; ++c) ideal_rows[t][c] = reduced(t, c);
  }

  const auto& top = p.degrees_[n];
  if (top.basis_columns.size() != 1)
    throw InputError("fan not complete: top graded piece has dimension " +
                     std::to_string(top.basis_columns.size()) + ", expected 1");

  Calibration& cal = p.calibration_;
  cal.reference = fan.cones(n).front();
  KeptPolynomial point = p.one();
  for (RayIndex i : cal.reference.rays()) point = p.times_variable(point, i);
  cal.coefficient = p.reduce(point).coefficient(top.basis_monomials.front());
  if (cal.coefficient == 0) throw InternalError("degenerate presentation: fan not complete or reduction bug");
  cal.multiplicity = fan.multiplicity(cal.reference);
  return p;
}

Monomial ChowPresentation::to_ray_monomial(const std::vector<std::uint32_t>& exponents) const {
  std::vector<Monomial::Factor> factors;
  for (std::size_t u = 0; u < exponents.size(); ++u)
    if (exponents[u] > 0) factors.emplace_back(kept_[u], exponents[u]);
  return Monomial::from_factors(std::move(factors));
}

std::vector<std::size_t> ChowPresentation::graded_dimensions() const {
  std::vector<std::size_t> dims;
  for (const auto& table : degrees_) dims.push_back(table.basis_columns.size());
  return dims;
}

ChowPresentation::KeptPolynomial ChowPresentation::one() const {
  KeptPolynomial p = zero(0);
  p.coefficients[0] = 1;
  return p;
}

ChowPresentation::KeptPolynomial ChowPresentation::zero(std::uint32_t degree) const {
  return KeptPolynomial{degree, std::vector<Rational>(degrees_.at(degree).exponents.size())};
}

ChowPresentation::KeptPolynomial ChowPresentation::times_variable(const KeptPolynomial& p, RayIndex ray) const {
  if (p.degree >= dim_) throw InternalError("product exceeds the top degree");
  const auto& table = degrees_[p.degree];
  const auto& sub = substitution_.at(ray);
  KeptPolynomial out = zero(p.degree + 1);
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    if (p.coefficients[i] == 0) continue;
    for (std::size_t u = 0; u < sub.size(); ++u)
      if (sub[u] != 0) out.coefficients[table.times_kept[i][u]] += p.coefficients[i] * sub[u];
  }
  return out;
}

void ChowPresentation::accumulate(KeptPolynomial& into, const KeptPolynomial& p, const Rational& scale) {
  if (into.degree != p.degree || into.coefficients.size() != p.coefficients.size())
    throw InternalError("accumulating polynomials of different degrees");
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    if (p.coefficients[i] != 0) into.coefficients[i] += scale * p.coefficients[i];
}

GradedClass ChowPresentation::reduce(const KeptPolynomial& p) const {
  const auto& table = degrees_.at(p.degree);
  std::vector<Rational> coords(table.basis_columns.size());
  for (std::size_t c = 0; c < p.coefficients.size(); ++c) {
    if (p.coefficients[c] == 0) continue;
    for (const auto& [b, value] : table.reduction[c]) coords[b] += p.coefficients[c] * value;
  }
  GradedClass out;
  for (std::size_t b = 0; b < coords.size(); ++b) out.add(table.basis_monomials[b], coords[b]);
  return out;
}

GradedClass ChowPresentation::normal_form(const GradedClass& c) const {
  std::vector<KeptPolynomial> pieces;
  for (std::uint32_t d = 0; d <= dim_; ++d) pieces.push_back(zero(d));
  for (const auto& [m, coefficient] : c.terms()) {
    if (m.degree() > dim_) continue;  // A^d = 0 above the dimension
    KeptPolynomial p = one();
    for (const auto& [var, power] : m.factors()) {
      if (var >= substitution_.size()) throw InputError("monomial uses an unknown variable");
      for (std::uint32_t e = 0; e < power; ++e) p = times_variable(p, var);
    }
    accumulate(pieces[p.degree], p, coefficient);
  }
  GradedClass out;
  for (const auto& piece : pieces) out += reduce(piece);
  return out;
}

Rational ChowPresentation::degree(const GradedClass& normal_form) const {
  const Monomial& point = degrees_[dim_].basis_monomials.front();
  Rational top = 0;
  for (const auto& [m, coefficient] : normal_form.terms()) {
    if (m.degree() != dim_) continue;
    if (!(m == point)) throw InputError("degree expects a class in normal form");
    top = coefficient;
  }
  return top / (calibration_.coefficient * calibration_.multiplicity);
}

}  // namespace toric
