#pragma once

#include <optional>
#include <vector>

#include "repst/scalar.hpp"

namespace repst {

/// Dense row-major matrix over the scalar tower.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool all_rational() const;
  Matrix evaluated(const Rational& x) const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Rank over Q(t). Fraction-free elimination over Q[t] after clearing
/// denominators row by row; plain Gaussian elimination when every entry
/// is a rational.
std::size_t rank(const Matrix& m);

/// Indices of the pivot columns of the row echelon form: the first maximal
/// independent subset of the columns, scanning left to right.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// Exact determinant. Throws DomainError for non-square input.
Scalar det(const Matrix& m);

/// Some X with m * X = rhs over Q(t), or nullopt if the system is
/// inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Some X with m * X = I, if one exists.
std::optional<Matrix> solve_right_inverse(const Matrix& m);

/// Rational matrices: Gaussian elimination over Q.
using QMatrix = std::vector<std::vector<Rational>>;
std::size_t rank_q(QMatrix m);
std::vector<std::size_t> pivot_columns_q(QMatrix m);
/// Solves m x = b over Q; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_q(const QMatrix& m, const std::vector<Rational>& b);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace_q(const QMatrix& m);
Rational det_q(QMatrix m);

}  // namespace repst
