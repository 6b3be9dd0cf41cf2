#include <doctest.h>

#include "repst/algebras.hpp"
#include "repst/fiber.hpp"
#include "repst/karoubi.hpp"

using namespace repst;

namespace {

Rational falling(long n, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

TEST_CASE("distinct idempotents") {
  CHECK(distinct_idempotent(1) == identity(1));
  const Morphism e2 = distinct_idempotent(2);
  CHECK(e2.size() == 2);
  CHECK(e2.coeff(Diagram::from_blocks(2, 2, {{0, 2}, {1, 3}})) == Scalar(1));
  CHECK(e2.coeff(Diagram::one_block(2, 2)) == Scalar(-1));
  const Morphism e3 = distinct_idempotent(3);
  CHECK(e3.size() == 5);
  CHECK(e3.coeff(Diagram::one_block(3, 3)) == Scalar(2));
  for (std::size_t k = 0; k <= 3; ++k) {
    const Morphism e = distinct_idempotent(k);
    CHECK(compose(e, e) == e);
    for (const auto& [d, c] : e.terms()) CHECK(c.is_rational());
  }
}

TEST_CASE("induced algebra for k = 1 is the generating object") {
  const auto a = build_induced_algebra(1, PermGroup::trivial(1));
  const auto g = frobenius_generators();
  CHECK(a.idem() == identity(1));
  CHECK(a.mult == g.mu);
  CHECK(a.unit == g.eta);
}

TEST_CASE("axioms hold for induced algebras") {
  for (std::size_t k = 0; k <= 3; ++k)
    for (const auto& h : subgroups_up_to_conjugacy(k)) {
      const auto a = build_induced_algebra(k, h);
      const auto r = check_axioms(a);
      CHECK(r.all());
      CHECK(a.carrier.is_idempotent());
    }
  CHECK(check_axioms(componentwise_square()).all());
}

TEST_CASE("corrupted structure maps are rejected") {
  auto a = build_induced_algebra(2, PermGroup::symmetric(2));
  auto terms = a.mult.sorted_terms();
  a.mult.add_term(terms.back().first, -terms.back().second);
  const auto r = check_axioms(a);
  CHECK_FALSE(r.associativity.holds);
  CHECK(r.associativity.counterexample);

  auto b = build_induced_algebra(2, PermGroup::trivial(2));
  auto uterms = b.unit.sorted_terms();
  b.unit.add_term(uterms.back().first, -uterms.back().second);
  CHECK_FALSE(check_axioms(b).unit.holds);

  auto c = build_induced_algebra(1, PermGroup::trivial(1));
  c.mult.add_term(Diagram::from_blocks(2, 1, {{0, 2}, {1}}), Scalar(1));
  CHECK_FALSE(check_axioms(c).commutativity.holds);
}

TEST_CASE("connectedness") {
  CHECK(connectedness(build_induced_algebra(1, PermGroup::trivial(1))) == 1);
  CHECK(connectedness(build_induced_algebra(2, PermGroup::trivial(2))) == 1);
  CHECK(connectedness(componentwise_square()) == 2);
}

TEST_CASE("pairing endomorphism specializes to the idempotent") {
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& h : subgroups_up_to_conjugacy(k)) {
      const auto a = build_induced_algebra(k, h);
      const auto p = pairing_nondegenerate(a);
      CHECK(p.nondegenerate);
      REQUIRE(p.inverse);
      CHECK(compose(p.phi, *p.inverse) == a.idem());
      CHECK(compose(*p.inverse, p.phi) == a.idem());
      for (std::size_t n = 5; n <= 7; ++n) CHECK(fiber_morphism(p.phi, n) == fiber_morphism(a.idem(), n));
    }
  auto z = build_induced_algebra(1, PermGroup::trivial(1));
  z.mult = Morphism(2, 1);
  CHECK_FALSE(pairing_nondegenerate(z).nondegenerate);
}

TEST_CASE("simplicity certificates") {
  for (std::size_t k = 0; k <= 2; ++k)
    for (const auto& h : subgroups_up_to_conjugacy(k)) {
      const auto c = certify_simple(build_induced_algebra(k, h));
      CHECK(c.verdict == Verdict::CertifiedSimple);
      CHECK(c.connectedness == 1);
    }
  const auto sq = certify_simple(componentwise_square());
  CHECK(sq.verdict == Verdict::CertifiedNonsimple);
  CHECK(sq.witness_n >= 3);
  CHECK(sq.witness_ideal_dim > 0);
  auto z = build_induced_algebra(1, PermGroup::trivial(1));
  z.mult = Morphism(2, 1);
  CHECK(certify_simple(z).verdict == Verdict::Inconclusive);
  CHECK(to_string(Verdict::CertifiedSimple) == "certified-simple");
}

TEST_CASE("categorical dimension counts cosets at integer fibers") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& h : subgroups_up_to_conjugacy(k)) {
      const Scalar d = dimension_poly(build_induced_algebra(k, h).carrier);
      for (long n = static_cast<long>(k); n <= 8; ++n)
        CHECK(d.evaluate(n) == falling(n, static_cast<long>(k)) / Rational(static_cast<long>(h.order())));
    }
}
