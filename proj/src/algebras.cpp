#include "repst/algebras.hpp"

#include "repst/equivariant.hpp"
#include "repst/fiber.hpp"

namespace repst {

Morphism distinct_idempotent(std::size_t k) {
  if (k > limits().distinct_idem_limit)
    throw LimitError("distinct_idempotent: k = " + std::to_string(k) + " exceeds the configured limit");
  Morphism e(k, k);
  for_each_partition(k, [&](const SetPartition& p) {
    std::vector<int> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = labels[k + i] = p.block_of(i);
    e.add_term(Diagram(k, k, SetPartition::from_labels(labels)), Scalar(moebius(p)));
  });
  return e;
}

Morphism subgroup_projector(const PermGroup& h) {
  const std::size_t k = h.degree();
  Morphism p(k, k);
  const Scalar weight = Scalar(Rational(1, static_cast<unsigned long>(h.order())));
  for (const auto& g : h.elements()) p.add_term(Diagram::permutation(g.images()), weight);
  return p;
}

Morphism strand_merge(std::size_t k) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back({j, k + j, 2 * k + j});
  return Morphism(Diagram::from_blocks(2 * k, k, blocks));
}

namespace {

Morphism unit_power(std::size_t k) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back({j});
  return Morphism(Diagram::from_blocks(0, k, blocks));
}

Morphism counit_power(std::size_t k) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back({j});
  return Morphism(Diagram::from_blocks(k, 0, blocks));
}

// 0 -> 2k, pairing point i with point k + i.
Morphism parallel_cup(std::size_t k) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back({j, k + j});
  return Morphism(Diagram::from_blocks(0, 2 * k, blocks));
}

LawCheck compare(const Morphism& lhs, const Morphism& rhs) {
  LawCheck c;
  Morphism diff = lhs - rhs;
  c.holds = diff.is_zero();
  if (!c.holds) c.counterexample = diff.sorted_terms().front();
  return c;
}

}  // namespace

AlgebraObject build_induced_algebra(std::size_t k, const PermGroup& h) {
  if (h.degree() != k) throw DomainError("build_induced_algebra: subgroup is not a subgroup of S_k");
  AlgebraObject a;
  const Morphism f = compose(distinct_idempotent(k), subgroup_projector(h));
  a.carrier = KObject(k, f);
  a.mult = compose(f, compose(strand_merge(k), tensor(f, f)));
  a.unit = compose(f, unit_power(k));
  a.subgroup = h.generators();
  return a;
}

AlgebraObject componentwise_square() {
  AlgebraObject a;
  a.carrier = KObject::tensor_power(2);
  a.mult = strand_merge(2);
  a.unit = unit_power(2);
  return a;
}

AxiomReport check_axioms(const AlgebraObject& a) {
  AxiomReport r;
  const std::size_t k = a.k();
  const Morphism& f = a.idem();
  const Morphism& m = a.mult;
  r.idempotent = compare(compose(f, f), f);
  {
    Morphism absorbed = compose(f, compose(m, tensor(f, f)));
    r.absorbs = compare(absorbed, m);
    if (r.absorbs.holds) r.absorbs = compare(compose(f, a.unit), a.unit);
  }
  r.associativity = compare(compose(m, tensor(m, f), &r.stats), compose(m, tensor(f, m), &r.stats));
  r.unit = compare(compose(m, tensor(a.unit, f)), f);
  r.commutativity = compare(compose(m, symmetry(k, k)), m);
  return r;
}

std::size_t connectedness(const AlgebraObject& a) {
  return hom_space(KObject::unit(), a.carrier).dimension;
}

PairingCertificate pairing_nondegenerate(const AlgebraObject& a) {
  PairingCertificate cert;
  const std::size_t k = a.k();
  const Morphism& f = a.idem();
  const Morphism pairing = compose(counit_power(k), compose(f, a.mult));
  const Morphism raw = compose(tensor(pairing, identity(k)), tensor(identity(k), parallel_cup(k)));
  cert.phi = compose(f, compose(raw, f));

  const HomSpace end = hom_space(a.carrier, a.carrier);
  cert.end_dimension = end.dimension;
  if (end.dimension == 0) {
    cert.det = Scalar(1);
    cert.nondegenerate = true;
    cert.inverse = f;
    return cert;
  }
  const std::size_t r = end.dimension;
  std::vector<Morphism> all = end.basis;
  for (const auto& b : end.basis) all.push_back(compose(cert.phi, b));
  all.push_back(f);
  const Matrix full = coordinate_matrix(all);
  Matrix basis(full.rows(), r), rhs(full.rows(), r + 1);
  for (std::size_t i = 0; i < full.rows(); ++i) {
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = full(i, j);
    for (std::size_t j = 0; j <= r; ++j) rhs(i, j) = full(i, r + j);
  }
  auto coords = solve(basis, rhs);
  if (!coords) throw ConsistencyError("pairing_nondegenerate: phi o End(A) left End(A)");
  Matrix left(r, r), unit_coords(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) left(i, j) = (*coords)(i, j);
    unit_coords(i, 0) = (*coords)(i, r);
  }
  cert.det = det(left);
  cert.nondegenerate = !cert.det.is_zero();
  if (!cert.nondegenerate) return cert;
  auto x = solve(left, unit_coords);
  if (!x) throw ConsistencyError("pairing_nondegenerate: invertible matrix without solution");
  Morphism psi(k, k);
  for (std::size_t j = 0; j < r; ++j)
    if (!(*x)(j, 0).is_zero()) psi += (*x)(j, 0) * end.basis[j];
  if (compose(cert.phi, psi) != f || compose(psi, cert.phi) != f)
    throw ConsistencyError("pairing_nondegenerate: inverse failed verification");
  cert.inverse = std::move(psi);
  return cert;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedSimple: return "certified-simple";
    case Verdict::CertifiedNonsimple: return "certified-nonsimple";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SimplicityCertificate certify_simple(const AlgebraObject& a) {
  SimplicityCertificate c;
  c.connectedness = connectedness(a);
  if (c.connectedness >= 2) {
    c.witness_n = std::max<std::size_t>(2 * a.k() + 1, 3);
    const auto v = is_simple_equivariant(specialize_algebra(a, c.witness_n));
    if (v.simple) throw ConsistencyError("certify_simple: disconnected algebra has a simple fiber");
    c.witness_ideal_dim = v.witness.size();
    c.verdict = Verdict::CertifiedNonsimple;
    return c;
  }
  c.pairing = pairing_nondegenerate(a);
  c.verdict = c.connectedness == 1 && c.pairing.nondegenerate ? Verdict::CertifiedSimple : Verdict::Inconclusive;
  return c;
}

}  // namespace repst
