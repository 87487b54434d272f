#include "toric/linalg.hpp"

#include "toric/error.hpp"

namespace toric {
namespace {

// Replaces rows (p, i) of m by (s*p + u*i, x*p + y*i). The caller
// guarantees s*y - u*x = 1.
void combine_rows(IntegerMatrix& m, std::size_t p, std::size_t i, const Integer& s, const Integer& u,
                  const Integer& x, const Integer& y) {
  Integer new_p, new_i;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer& vp = m(p, j);
    const Integer& vi = m(i, j);
    if (vp == 0 && vi == 0) continue;
    new_p = s * vp + u * vi;
    new_i = x * vp + y * vi;
    m(p, j) = std::move(new_p);
    m(i, j) = std::move(new_i);
  }
}

// row[i] -= q * row[p]
void subtract_row(IntegerMatrix& m, std::size_t i, std::size_t p, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(p, j) != 0) m(i, j) -= q * m(p, j);
}

void negate_row(IntegerMatrix& m, std::size_t p) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(p, j) = -m(p, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t d = m.cols();
  if (n < d) throw InputError("over-wide matrix");

  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(n);

  Integer g, s, t, x, y, q;
  for (std::size_t col = 0; col < d; ++col) {
    // Pivot of column `col` sits in row `col` because the rank is d.
    for (std::size_t i = col + 1; i < n; ++i) {
      if (h(i, col) == 0) continue;
      if (h(col, col) == 0) {
        h.swap_rows(col, i);
        u.swap_rows(col, i);
        continue;
      }
      if (mpz_divisible_p(h(i, col).get_mpz_t(), h(col, col).get_mpz_t())) {
        q = h(i, col) / h(col, col);
        subtract_row(h, i, col, q);
        subtract_row(u, i, col, q);
        continue;
      }
      const Integer a = h(col, col);
      const Integer b = h(i, col);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      x = -b / g;
      y = a / g;
      combine_rows(h, col, i, s, t, x, y);
      combine_rows(u, col, i, s, t, x, y);
    }
    if (h(col, col) == 0) throw InputError("not simplicial");
    if (h(col, col) < 0) {
      negate_row(h, col);
      negate_row(u, col);
    }
    for (std::size_t i = 0; i < col; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(col, col).get_mpz_t());
      if (q == 0) continue;
      subtract_row(h, i, col, q);
      subtract_row(u, i, col, q);
    }
  }
  return {std::move(h), std::move(u)};
}

IntegerMatrix strip_zero_rows(const IntegerMatrix& h) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (h(i, j) != 0) {
        keep.push_back(i);
        break;
      }
    }
  }
  if (keep.size() != h.cols()) throw InternalError("stripped Hermite block is not square");
  IntegerMatrix out(keep.size(), h.cols());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t j = 0; j < h.cols(); ++j) out(r, j) = h(keep[r], j);
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntegerMatrix a = m;
  Integer previous = 1;
  Integer tmp;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

RowEchelon rational_rref(RationalMatrix m) {
  RowEchelon out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j).canonicalize();
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.swap_rows(p, row);

    if (m(row, col) != 1) {
      const Rational inv = 1 / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace toric
