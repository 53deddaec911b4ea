#pragma once

// Exact integer and rational linear algebra over GMP. Every lattice
// decision in the library (saturation, kernels, ranks) goes through here;
// nothing in this header touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/errors.hpp"

namespace sasaki {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (no decimal point, no exponent).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error(ErrorCode::invalid_argument,
                  "matrix entry count does not match its dimensions");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Stacks the given vectors as rows; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorCode::invalid_argument, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<T>& entries() const noexcept { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::invalid_argument, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size())
      throw Error(ErrorCode::invalid_argument, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// A Z-basis of a sublattice of Z^ambient_dim.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;

  std::size_t rank() const noexcept { return vectors.size(); }
};

struct GcdCertificate {
  Integer g;
  Integer x;
  Integer y;
};

/// Extended Euclid: g = gcd(a, b) > 0 and a*x + b*y = g.
GcdCertificate gcd_ext(const Integer& a, const Integer& b);

struct HermiteForm {
  IntMatrix H;  ///< row-style HNF
  IntMatrix U;  ///< unimodular, U * M == H
};

/// Row-style Hermite normal form: H is in row echelon form, every pivot is
/// positive and the entries above a pivot lie in [0, pivot). Zero rows are
/// collected at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& M);

/// Nonzero invariant factors d1 | d2 | ... of the Smith form of M; there are
/// rank(M) of them.
IntVector smith_invariant_factors(const IntMatrix& M);

/// Basis of {x in Z^cols : M x = 0}, returned in Hermite normal form.
LatticeBasis integer_kernel_basis(const IntMatrix& M);

/// Basis (HNF rows) of Z^n ∩ span_Q(rows of M).
IntMatrix saturation_basis(const IntMatrix& M);

bool is_primitive(std::span<const Integer> v);

Integer content(std::span<const Integer> v);
Integer lcm_of_denominators(std::span<const Rational> v);

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Throws on the zero vector.
IntVector primitive_part(std::span<const Rational> v);
IntVector primitive_part(std::span<const Integer> v);

/// Multiplies every entry by the lcm of all denominators.
IntMatrix clear_denominators(const RatMatrix& M);

RatMatrix to_rational(const IntMatrix& M);
RatVector to_rational(std::span<const Integer> v);

std::size_t rank(const IntMatrix& M);
std::size_t rank(const RatMatrix& M);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& M);
Rational determinant(const RatMatrix& M);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix& M);

/// Basis of the rational kernel {x : M x = 0}; each vector has a 1 in its
/// free coordinate.
std::vector<RatVector> rational_kernel(const RatMatrix& M);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& M);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

}  // namespace sasaki
