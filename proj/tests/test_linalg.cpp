#include <doctest.h>

#include <random>

#include "repst/diagram.hpp"
#include "repst/linalg.hpp"

using namespace repst;

namespace {

Scalar S(const char* s) { return Scalar::parse(s); }

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 3) - 1;
      m(i, j) = Scalar(Poly(std::vector<Rational>{Rational(a), Rational(b)}));
      if (rng() % 4 == 0) m(i, j) /= Scalar(Poly(std::vector<Rational>{Rational(1 + rng() % 3), Rational(1)}));
    }
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{S("t"), S("t^2")}, {1, S("t")}}) == 1);
  CHECK(rank(Matrix{{S("t"), 1}, {1, S("t")}}) == 2);
  CHECK(rank(Matrix(2, 3)) == 0);
}

TEST_CASE("determinant") {
  CHECK(det(Matrix::identity(4)) == Scalar(1));
  CHECK(det(Matrix{{S("t"), 1}, {1, S("t")}}) == S("t^2-1"));
  CHECK(det(Matrix{{Scalar(1) / Scalar::t(), 1}, {1, S("t")}}) == Scalar(0));
  CHECK_THROWS_AS(det(Matrix(2, 3)), DomainError);
}

TEST_CASE("right inverses") {
  CHECK(*solve_right_inverse(Matrix::identity(2)) == Matrix::identity(2));
  const Matrix row{{1, S("t")}};
  auto x = solve_right_inverse(row);
  REQUIRE(x);
  CHECK(row * *x == Matrix::identity(1));
  CHECK_FALSE(solve_right_inverse(Matrix{{1}, {S("t")}}));
}

TEST_CASE("rank agrees with evaluation at random rational points") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = random_matrix(r, c, rng);
    if (rng() % 2 && r > 1) {
      // Force a dependency: last row = t * first row.
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = Scalar::t() * m(0, j);
    }
    const std::size_t symbolic = rank(m);
    int agreeing = 0;
    for (long x = 101; agreeing < 3; x += 7) {
      bool pole = false;
      for (std::size_t i = 0; i < r && !pole; ++i)
        for (std::size_t j = 0; j < c && !pole; ++j) pole = m(i, j).den().evaluate(x) == 0;
      if (pole) continue;
      CHECK(rank(m.evaluated(Rational(x))) == symbolic);
      ++agreeing;
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const Matrix a = random_matrix(n, n, rng), b = random_matrix(n, n, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve over Q(t)") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(3, 3, rng), x = random_matrix(3, 1, rng);
    const Matrix b = a * x;
    auto y = solve(a, b);
    REQUIRE(y);
    CHECK(a * *y == b);
  }
}

TEST_CASE("Gram determinant of End(h) against fiber Gram determinants") {
  // Basis {id, D}; pairing (x, y) -> closure_trace(x o y).
  const std::vector<Morphism> basis{identity(1), Morphism(Diagram::from_blocks(1, 1, {{0}, {1}}))};
  Matrix gram(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gram(i, j) = closure_trace(compose(basis[i], basis[j]));
  const Scalar d = det(gram);
  CHECK_FALSE(d.is_zero());
  for (long n = 2; n <= 5; ++n) {
    // Fiber: id -> I_n, D -> J_n; trace(I) = n, trace(J) = n, trace(J^2) = n^2.
    QMatrix fiber{{Rational(n), Rational(n)}, {Rational(n), Rational(n * n)}};
    CHECK(d.evaluate(n) == det_q(fiber));
  }
}

TEST_CASE("rational helpers") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank_q(m) == 2);
  CHECK(pivot_columns_q(m) == std::vector<std::size_t>{0, 1});
  const auto ns = nullspace_q(m);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) CHECK(row[0] * ns[0][0] + row[1] * ns[0][1] + row[2] * ns[0][2] == 0);
  CHECK_FALSE(solve_q(m, {1, 0, 0}));
}
