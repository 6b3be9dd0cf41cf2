#include "repst/linalg.hpp"

#include <algorithm>
#include <string>

namespace repst {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool Matrix::all_rational() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Matrix Matrix::evaluated(const Rational& x) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = Scalar(a_[i].evaluate(x));
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw DomainError("matrix product: inner dimensions differ");
  Matrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
    }
  return r;
}

// ---------------------------------------------------------------- over Q

namespace {

struct QEchelon {
  std::vector<std::size_t> pivots;
  int sign = 1;
};

// In-place row echelon form over Q; returns pivot columns.
QEchelon echelon_q(QMatrix& m) {
  QEchelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

QMatrix to_q(const Matrix& m) {
  QMatrix q(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = m(i, j).rational();
  return q;
}

// Fraction-free elimination over Q[t]. Each row is first multiplied by the
// lcm of its denominators; `scale` records the product of those factors.
struct PolyEchelon {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Poly>> rows;
  Poly scale{1};
  int sign = 1;
};

PolyEchelon bareiss(const Matrix& m) {
  PolyEchelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  e.rows.assign(rows, std::vector<Poly>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Poly l(1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_one()) continue;
      l = l * d.exact_div(gcd(l, d));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& s = m(i, j);
      e.rows[i][j] = s.den().is_one() ? s.num() * l : s.num() * l.exact_div(s.den());
    }
    e.scale = e.scale * l;
  }
  auto& a = e.rows;
  Poly prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero() && (p == rows || a[i][c].degree() < a[p][c].degree())) p = i;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = prev.is_one() ? std::move(v) : v.exact_div(prev);
      }
      a[i][c] = Poly{};
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank_q(QMatrix m) { return echelon_q(m).pivots.size(); }

std::vector<std::size_t> pivot_columns_q(QMatrix m) { return echelon_q(m).pivots; }

Rational det_q(QMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("det: matrix is not square");
  auto e = echelon_q(m);
  if (e.pivots.size() < n) return 0;
  Rational d = e.sign;
  for (std::size_t i = 0; i < n; ++i) d *= m[i][i];
  return d;
}

std::optional<std::vector<Rational>> solve_q(const QMatrix& m, const std::vector<Rational>& b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (b.size() != rows) throw DomainError("solve: right-hand side has wrong length");
  QMatrix aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto e = echelon_q(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t c = e.pivots[r];
    Rational v = aug[r][cols];
    for (std::size_t j = c + 1; j < cols; ++j)
      if (aug[r][j] != 0) v -= aug[r][j] * x[j];
    x[c] = v / aug[r][c];
  }
  return x;
}

std::vector<std::vector<Rational>> nullspace_q(const QMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  QMatrix a = m;
  auto e = echelon_q(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t c = e.pivots[r];
      Rational v = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (a[r][j] != 0) v -= a[r][j] * x[j];
      x[c] = v / a[r][c];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  if (m.all_rational()) return rank_q(to_q(m));
  return bareiss(m).pivots.size();
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
  if (m.all_rational()) return pivot_columns_q(to_q(m));
  return bareiss(m).pivots;
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (m.all_rational()) return Scalar(det_q(to_q(m)));
  auto e = bareiss(m);
  if (e.pivots.size() < n) return Scalar(0);
  // The last pivot of fraction-free elimination is the determinant of the
  // row-scaled matrix.
  Poly d = e.rows[n - 1][n - 1];
  if (e.sign < 0) d = -d;
  return Scalar(d, e.scale);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw DomainError("solve: row counts differ");
  const std::size_t rows = m.rows(), cols = m.cols(), k = rhs.cols();
  if (m.all_rational() && rhs.all_rational()) {
    Matrix x(cols, k);
    QMatrix q = to_q(m);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rational> b(rows);
      for (std::size_t i = 0; i < rows; ++i) b[i] = rhs(i, j).rational();
      auto sol = solve_q(q, b);
      if (!sol) return std::nullopt;
      for (std::size_t i = 0; i < cols; ++i) x(i, j) = Scalar((*sol)[i]);
    }
    return x;
  }
  // Gauss-Jordan over Q(t) on the augmented matrix.
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols + k));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
    for (std::size_t j = 0; j < k; ++j) a[i][cols + j] = rhs(i, j);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero() && (p == rows || a[i][c].num().degree() + a[i][c].den().degree() <
                                                   a[p][c].num().degree() + a[p][c].den().degree()))
        p = i;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = Scalar(1) / a[r][c];
    for (std::size_t j = c; j < cols + k; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < cols + k; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!a[i][cols + j].is_zero()) return std::nullopt;
  Matrix x(cols, k);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    for (std::size_t j = 0; j < k; ++j) x(pivots[pr], j) = a[pr][cols + j];
  return x;
}

std::optional<Matrix> solve_right_inverse(const Matrix& m) { return solve(m, Matrix::identity(m.rows())); }

}  // namespace repst
