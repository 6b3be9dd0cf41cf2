#include <doctest.h>

#include <random>

#include "repst/diagram.hpp"

using namespace repst;

namespace {

Morphism D(std::size_t a, std::size_t b, std::vector<std::vector<std::size_t>> blocks, Scalar c = 1) {
  return Morphism(Diagram::from_blocks(a, b, blocks), c);
}

Morphism random_morphism(std::size_t a, std::size_t b, std::mt19937_64& rng) {
  Morphism m(a, b);
  const std::size_t terms = 1 + rng() % 5;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<int> labels(a + b);
    for (auto& l : labels) l = static_cast<int>(rng() % (a + b));
    const Poly c(std::vector<Rational>{Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 3))});
    if (!c.is_zero()) m.add_term(Diagram(a, b, SetPartition::from_labels(labels)), Scalar(c));
  }
  return m;
}

}  // namespace

TEST_CASE("identity") {
  CHECK(identity(0).size() == 1);
  CHECK(identity(1) == D(1, 1, {{0, 1}}));
  CHECK(identity(2) == D(2, 2, {{0, 2}, {1, 3}}));
}

TEST_CASE("composition examples") {
  const auto g = frobenius_generators();
  const Morphism d = D(1, 1, {{0}, {1}});
  CHECK(compose(identity(1), d) == d);
  CHECK(compose(d, d) == Scalar::t() * d);
  CHECK(compose(g.epsilon, g.eta) == Scalar::t() * identity(0));
  CHECK(compose(g.mu, g.delta) == identity(1));
  CHECK_THROWS_AS(compose(g.mu, g.mu), DomainError);
}

TEST_CASE("tensor and symmetry") {
  const auto g = frobenius_generators();
  CHECK(tensor(identity(1), identity(1)) == identity(2));
  CHECK(tensor(g.eta, g.epsilon) == D(1, 1, {{0}, {1}}));
  CHECK(tensor(g.mu, identity(0)) == g.mu);
  CHECK(symmetry(1, 0) == identity(1));
  CHECK(symmetry(1, 1) == D(2, 2, {{0, 3}, {1, 2}}));
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) CHECK(compose(symmetry(b, a), symmetry(a, b)) == identity(a + b));
}

TEST_CASE("cups, caps and traces") {
  CHECK(cup_cap(1, CupCap::Cup) == D(0, 2, {{0, 1}}));
  CHECK(compose(cup_cap(1, CupCap::Cap), cup_cap(1, CupCap::Cup)) == Scalar::t() * identity(0));
  for (std::size_t k = 0; k <= 3; ++k) {
    const Morphism snake = compose(tensor(cup_cap(k, CupCap::Cap), identity(k)), tensor(identity(k), cup_cap(k, CupCap::Cup)));
    CHECK(snake == identity(k));
  }
  CHECK(closure_trace(identity(1)) == Scalar::t());
  CHECK(closure_trace(D(1, 1, {{0}, {1}})) == Scalar::t());
  CHECK(closure_trace(identity(2)) == Scalar::t() * Scalar::t());
  CHECK_THROWS_AS(closure_trace(frobenius_generators().mu), DomainError);
}

TEST_CASE("Frobenius generators") {
  const auto g = frobenius_generators();
  const Morphism id1 = identity(1);
  CHECK(compose(tensor(id1, g.mu), tensor(g.delta, id1)) == compose(g.delta, g.mu));
  CHECK(compose(g.delta, g.mu) == Morphism(Diagram::one_block(2, 2)));
  CHECK(compose(g.mu, tensor(g.eta, id1)) == id1);
  CHECK(compose(g.mu, symmetry(1, 1)) == g.mu);
}

TEST_CASE("associativity, interchange and naturality on random morphisms") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t a = rng() % 4, b = rng() % 4, c = rng() % 4, d = rng() % 4;
    const Morphism f = random_morphism(a, b, rng), g = random_morphism(b, c, rng), h = random_morphism(c, d, rng);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));

    const std::size_t a2 = rng() % 3, b2 = rng() % 3, c2 = rng() % 3;
    const Morphism f2 = random_morphism(a2, b2, rng), g2 = random_morphism(b2, c2, rng);
    CHECK(compose(tensor(g, g2), tensor(f, f2)) == tensor(compose(g, f), compose(g2, f2)));
    CHECK(compose(symmetry(b, b2), tensor(f, f2)) == compose(tensor(f2, f), symmetry(a, a2)));
  }
}

TEST_CASE("specialized coefficients") {
  const Morphism m = Scalar::parse("t^2-1") * identity(1);
  CHECK(specialize_coefficients(m, 1).is_zero());
  CHECK(specialize_coefficients(m, 2) == Scalar(3) * identity(1));
}
