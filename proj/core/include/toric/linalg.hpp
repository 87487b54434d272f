#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

struct HermiteForm {
  IntegerMatrix hnf;        // n x d, equal to transform * input
  IntegerMatrix transform;  // n x n unimodular
};

/// Hermite normal form of an n x d integer matrix of rank d, reached by
/// unimodular row operations: U * M = [H; 0].
///
/// H is upper triangular with positive diagonal, and each entry above a
/// diagonal entry lies in [0, diagonal). The bottom n - d rows are zero.
/// The form is unique, so applying it twice is a no-op.
///
/// Throws InputError("over-wide matrix") when n < d and
/// InputError("not simplicial") when the columns are linearly dependent.
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// Drops the all-zero rows of an HNF output, leaving the d x d upper
/// triangular block. Throws InternalError if the result would not be square.
IntegerMatrix strip_zero_rows(const IntegerMatrix& h);

/// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& m);

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q. Pivot columns are listed in order.
RowEchelon rational_rref(RationalMatrix m);

IntegerMatrix transpose(const IntegerMatrix& m);
RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace toric
