#include <doctest.h>

#include <random>

#include "repst/scalar.hpp"

using namespace repst;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c(1 + rng() % (max_degree + 1));
  for (auto& x : c) x = Q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
  return Poly(std::move(c));
}

Scalar random_scalar(std::mt19937_64& rng) {
  Poly den;
  do den = random_poly(rng, 2);
  while (den.is_zero());
  return Scalar(random_poly(rng, 3), den);
}

// Lagrange form evaluated at x.
Rational lagrange(const std::vector<std::pair<Rational, Rational>>& pts, const Rational& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational term = pts[i].second;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) term *= (x - pts[j].first) / (pts[i].first - pts[j].first);
    s += term;
  }
  return s;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(Scalar::t() * Scalar::t() == S("t^2"));
  CHECK(S("t^2 - t") / S("t - 1") == Scalar::t());
  CHECK(S("1/2") + S("1/3") == S("5/6"));
  CHECK(arith(S("1/2"), S("1/3"), ArithOp::Add) == S("5/6"));
  CHECK(arith(S("t"), S("t"), ArithOp::Sub).is_zero());
  CHECK_THROWS_AS(arith(S("t"), Scalar(0), ArithOp::Div), ArithmeticError);
  CHECK((S("t^2 - t") / S("t - 1")).kind() == Scalar::Kind::Poly);
  CHECK(S("3").kind() == Scalar::Kind::Rational);
  CHECK((S("1") / S("t")).kind() == Scalar::Kind::RatFun);
  CHECK(S("(t^2-t)/2") == Scalar(Poly(std::vector<Rational>{0, Q(-1, 2), Q(1, 2)})));
}

TEST_CASE("canonical forms") {
  const Scalar a(Poly(std::vector<Rational>{Q(-2), Q(2)}), Poly(std::vector<Rational>{Q(-3), Q(3)}));
  CHECK(a == Scalar(Q(2, 3)));
  const Scalar b(Poly(std::vector<Rational>{Q(0), Q(2)}), Poly(std::vector<Rational>{Q(4), Q(2)}));
  CHECK(b.den().leading() == 1);
  CHECK(b == S("t/(t+2)"));
  CHECK(Scalar(b.num(), b.den()) == b);
}

TEST_CASE("evaluation") {
  CHECK(S("t^2 - t").evaluate(3) == 6);
  CHECK(Scalar::t().evaluate(Q(7, 3)) == Q(7, 3));
  CHECK(S("(t^2-t)/2").evaluate(5) == 10);
  CHECK_THROWS_AS(S("1/(t-2)").evaluate(2), ArithmeticError);
}

TEST_CASE("evaluation is a ring homomorphism and equality matches cross-multiplication") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    const Rational x = Q(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    if (a.den().evaluate(x) == 0 || b.den().evaluate(x) == 0) continue;
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
    const bool cross = a.num() * b.den() == b.num() * a.den();
    CHECK((a == b) == cross);
  }
}

TEST_CASE("interpolation") {
  CHECK(interpolate({{0, 0}, {1, 0}, {2, 2}, {3, 6}}, 2) == Poly(std::vector<Rational>{0, -1, 1}));
  CHECK(interpolate({{5, 7}}, 0) == Poly(7));
  CHECK_THROWS_AS(interpolate({{0, 0}, {1, 1}, {2, 3}}, 1), ConsistencyError);
  CHECK_THROWS_AS(interpolate({{0, 0}}, 1), DomainError);
  CHECK_THROWS_AS(interpolate({{0, 0}, {0, 1}}, 1), DomainError);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_poly(rng, 5);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long x = -2; x <= 4; ++x) pts.emplace_back(Q(x), p.evaluate(x));
    const Poly fit = interpolate(pts, 6);
    CHECK(fit == p);
    for (long x = 10; x < 13; ++x) CHECK(fit.evaluate(x) == lagrange(pts, x));
  }
}

TEST_CASE("polynomial division and gcd") {
  const Poly a = Poly::t() * Poly::t() - Poly(1), b = Poly::t() - Poly(1);
  auto [q, r] = a.divmod(b);
  CHECK(q == Poly::t() + Poly(1));
  CHECK(r.is_zero());
  CHECK(gcd(a, b) == b);
  CHECK_THROWS_AS(a.divmod(Poly()), ArithmeticError);
  CHECK(Poly(std::vector<Rational>{0, Q(-1, 2), Q(1, 2)}).to_string() == "1/2*t^2 - 1/2*t");
}
