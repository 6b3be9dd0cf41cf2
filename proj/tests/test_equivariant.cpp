#include <doctest.h>

#include <random>

#include "repst/equivariant.hpp"

using namespace repst;

namespace {

// Q[x]/(x^2 - c) with trivial S_2 action; basis {1, x}.
EquivariantAlgebra quadratic(long c) {
  EquivariantAlgebra a;
  a.dim = 2;
  a.degree = 2;
  a.group_generators = symmetric_generators(2);
  a.set_product(0, 0, {{0, Rational(1)}});
  a.set_product(0, 1, {{1, Rational(1)}});
  a.set_product(1, 0, {{1, Rational(1)}});
  if (c != 0) a.set_product(1, 1, {{0, Rational(c)}});
  a.action.assign(a.group_generators.size(), {{{0, Rational(1)}}, {{1, Rational(1)}}});
  a.unit = {1, 0};
  a.labels = {"1", "x"};
  return a;
}

QMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    QMatrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = Rational(static_cast<long>(rng() % 7) - 3);
    if (det_q(m) != 0) return m;
  }
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    auto x = solve_q(m, e);
    REQUIRE(x);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*x)[i];
  }
  return inv;
}

QVector mat_apply(const QMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Same algebra in the basis given by the columns of m.
EquivariantAlgebra transported(const EquivariantAlgebra& a, const QMatrix& m) {
  const QMatrix inv = inverse(m);
  auto column = [&](std::size_t j) {
    QVector c(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) c[i] = m[i][j];
    return c;
  };
  EquivariantAlgebra b;
  b.dim = a.dim;
  b.degree = a.degree;
  b.group_generators = a.group_generators;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) b.set_product(i, j, to_sparse(mat_apply(inv, a.multiply(column(i), column(j)))));
  b.action.resize(a.action.size());
  for (std::size_t g = 0; g < a.action.size(); ++g)
    for (std::size_t j = 0; j < a.dim; ++j) b.action[g].push_back(to_sparse(mat_apply(inv, a.act(g, column(j)))));
  b.unit = mat_apply(inv, a.unit);
  b.labels.assign(a.dim, "");
  return b;
}

}  // namespace

TEST_CASE("reduced and non-reduced quadratics") {
  const auto nil = quadratic(0);
  CHECK(nil.validate().empty());
  CHECK(nilradical(nil).size() == 1);
  CHECK_THROWS_AS(primitive_idempotents(nil), DomainError);
  const auto v = is_simple_equivariant(nil);
  CHECK_FALSE(v.simple);
  CHECK_FALSE(v.reduced);
  CHECK(v.witness.size() == 1);

  const auto split = quadratic(1);
  CHECK(nilradical(split).empty());
  const auto idems = primitive_idempotents(split);
  REQUIRE(idems.size() == 2);
  for (const auto& e : idems) CHECK(split.multiply(e, e) == e);
  CHECK(split.multiply(idems[0], idems[1]) == QVector{0, 0});
  // Trivial action: two fixed idempotents, so not simple.
  CHECK_FALSE(is_simple_equivariant(split).simple);

  CHECK_THROWS_AS(primitive_idempotents(quadratic(2)), DomainError);
}

TEST_CASE("simplicity of coset algebras") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& h : subgroups_up_to_conjugacy(n)) {
      const auto v = is_simple_equivariant(coset_algebra(n, h));
      CHECK(v.simple);
      CHECK(v.orbit_route);
      CHECK(v.ideal_route);
      CHECK(v.orbit_count == 1);
    }
}

TEST_CASE("direct sums are not simple") {
  const auto one = coset_algebra(3, PermGroup::symmetric(3));
  const auto two = direct_sum(one, one);
  CHECK(two.dim == 2);
  CHECK(two.validate().empty());
  const auto v = is_simple_equivariant(two);
  CHECK_FALSE(v.simple);
  CHECK(v.orbit_count == 2);
  REQUIRE(v.witness.size() == 1);
  CHECK(two.multiply(v.witness[0], v.witness[0]) == v.witness[0]);
}

TEST_CASE("many primitive idempotents") {
  const auto big = coset_algebra(5, PermGroup::trivial(5));
  const auto v = is_simple_equivariant(big);
  CHECK(v.primitive_count == 120);
  CHECK(v.simple);

  const auto half = coset_algebra(4, PermGroup(4, {Permutation::from_cycles(4, "(0 1)")}));
  const auto sum = direct_sum(half, half);
  CHECK(sum.dim == 24);
  const auto w = is_simple_equivariant(sum);
  CHECK_FALSE(w.simple);
  CHECK_FALSE(w.orbit_route);
  CHECK_FALSE(w.ideal_route);
}

TEST_CASE("isomorphisms after a change of basis") {
  std::mt19937_64 rng(5);
  for (const auto& h : subgroups_up_to_conjugacy(3)) {
    const auto a = coset_algebra(3, h);
    const QMatrix m = random_invertible(a.dim, rng);
    const auto b = transported(a, m);
    CHECK(b.validate().empty());
    CHECK(is_equivariant_isomorphism(a, b, inverse(m)));
    auto iso = find_equivariant_isomorphism(a, b);
    REQUIRE(iso);
    CHECK(is_equivariant_isomorphism(a, b, iso->matrix));
    CHECK(primitive_idempotents(b).size() == a.dim);
  }
}

TEST_CASE("conjugate versus non-conjugate subgroups") {
  const auto a = coset_algebra(4, PermGroup(4, {Permutation::from_cycles(4, "(0 1)")}));
  const auto b = coset_algebra(4, PermGroup(4, {Permutation::from_cycles(4, "(2 3)")}));
  const auto c = coset_algebra(4, PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)")}));
  auto iso = find_equivariant_isomorphism(a, b);
  REQUIRE(iso);
  CHECK(is_equivariant_isomorphism(a, b, iso->matrix));
  CHECK_FALSE(find_equivariant_isomorphism(a, c));
  // The identity map is not equivariant between different coset spaces.
  QMatrix id(12, std::vector<Rational>(12, Rational(0)));
  for (std::size_t i = 0; i < 12; ++i) id[i][i] = 1;
  CHECK_FALSE(is_equivariant_isomorphism(a, c, id));
}

TEST_CASE("dimension limit") {
  const Limits saved = limits();
  Limits l = saved;
  l.equivariant_dim_limit = 10;
  set_limits(l);
  CHECK_THROWS_AS(is_simple_equivariant(coset_algebra(4, PermGroup::trivial(4))), LimitError);
  set_limits(saved);
}
