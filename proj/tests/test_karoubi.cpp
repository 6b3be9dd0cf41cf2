#include <doctest.h>

#include <map>
#include <set>

#include "repst/algebras.hpp"
#include "repst/fiber.hpp"
#include "repst/karoubi.hpp"

using namespace repst;

namespace {

// Orbits of S_n on index tuples (i, j, k, l) with i != j and k != l, counted
// through the pattern of equalities; equals dim End(fiber of im e_2)^{S_n}.
std::size_t injective_pair_orbits(std::size_t n) {
  std::set<std::vector<int>> patterns;
  std::vector<std::size_t> idx(4, 0);
  for (;;) {
    if (idx[0] != idx[1] && idx[2] != idx[3]) {
      std::map<std::size_t, int> relabel;
      std::vector<int> p;
      for (auto v : idx) p.push_back(relabel.emplace(v, static_cast<int>(relabel.size())).first->second);
      patterns.insert(p);
    }
    std::size_t pos = 4;
    while (pos > 0 && ++idx[pos - 1] == n) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return patterns.size();
}

}  // namespace

TEST_CASE("hom space dimensions") {
  const auto h = KObject::generator();
  const auto one = KObject::unit();
  CHECK(hom_space(h, h).dimension == 2);
  CHECK(hom_space(one, h).dimension == 1);
  CHECK(hom_space(one, one).dimension == 1);
  CHECK(hom_space(KObject::tensor_power(2), KObject::tensor_power(2)).dimension == 15);
  const KObject x(2, distinct_idempotent(2));
  const std::size_t d = hom_space(x, x).dimension;
  CHECK(d == 7);
  CHECK(d == injective_pair_orbits(5));
  CHECK(d == injective_pair_orbits(6));
}

TEST_CASE("hom spaces lie inside the idempotent sandwich") {
  const KObject x(2, distinct_idempotent(2));
  const auto h = KObject::generator();
  for (const auto& m : hom_space(h, x).basis) {
    CHECK(compose(x.idem, m) == m);
    CHECK(compose(m, h.idem) == m);
  }
}

TEST_CASE("diagram bases") {
  CHECK(diagram_basis(1, 1).size() == 2);
  CHECK(diagram_basis(2, 2).size() == 15);
  CHECK(diagram_basis(0, 0).size() == 1);
  CHECK_THROWS_AS(diagram_basis(4, 5), LimitError);
}

TEST_CASE("dimension polynomials agree with fiber traces") {
  struct Case {
    KObject x;
    const char* expected;
  };
  const std::vector<Case> cases{
      {KObject::generator(), "t"},
      {KObject::unit(), "1"},
      {KObject(2, distinct_idempotent(2)), "t^2-t"},
      {build_induced_algebra(2, PermGroup::symmetric(2)).carrier, "(t^2-t)/2"},
      {build_induced_algebra(3, PermGroup::trivial(3)).carrier, "t^3-3*t^2+2*t"},
  };
  for (const auto& c : cases) {
    const Scalar p = dimension_poly(c.x);
    CHECK(p == Scalar::parse(c.expected));
    // Interpolate through fiber traces at t = 3..7.
    std::vector<std::pair<Rational, Rational>> pts;
    for (long n = 3; n <= 7; ++n) pts.emplace_back(n, fiber_morphism(c.x.idem, n).trace());
    CHECK(Scalar(interpolate(pts, 4)) == p);
  }
}

TEST_CASE("split monomorphisms") {
  const auto g = frobenius_generators();
  const auto one = KObject::unit();
  const auto h = KObject::generator();
  auto v = is_split_mono(g.eta, one, h);
  REQUIRE(v);
  CHECK(compose(*v, g.eta) == identity(0));
  const Morphism expected = (Scalar(1) / Scalar::t()) * g.epsilon;
  CHECK(compose(expected, g.eta) == identity(0));

  CHECK_FALSE(is_split_mono(Morphism(0, 1), one, h));
  CHECK_THROWS_AS(is_split_mono(g.mu, one, h), DomainError);
  CHECK(certify_no_split_mono(h, one));
  CHECK_FALSE(certify_no_split_mono(one, h));
}

TEST_CASE("levels") {
  const auto h = level_upper_bound(KObject::generator());
  CHECK(h.bound == 1);
  CHECK(h.certified_upper);
  CHECK(h.certified_lower);
  REQUIRE(h.embedding);
  REQUIRE(h.retraction);
  CHECK(compose(*h.retraction, *h.embedding) == identity(1));

  const auto u = level_upper_bound(KObject::unit());
  CHECK(u.bound == 0);
  CHECK(u.certified_upper);

  const auto a = level_upper_bound(build_induced_algebra(2, PermGroup::trivial(2)).carrier);
  CHECK(a.bound == 2);
  CHECK(a.certified_upper);
  CHECK(a.certified_lower);
}

TEST_CASE("objects must be idempotent endomorphisms") {
  CHECK_THROWS_AS(KObject(1, frobenius_generators().mu), DomainError);
  CHECK(tensor(KObject::generator(), KObject::generator()).ambient == 2);
}
