#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repst/karoubi.hpp"
#include "repst/symgroup.hpp"

namespace repst {

/// Commutative algebra object: carrier (image of f on [k]), multiplication
/// 2k -> k and unit 0 -> k.
struct AlgebraObject {
  KObject carrier;
  Morphism mult;
  Morphism unit;
  /// Generators of H <= S_k for induced algebras; empty for other models.
  std::vector<Permutation> subgroup;

  std::size_t k() const { return carrier.ambient; }
  const Morphism& idem() const { return carrier.idem; }
};

/// e_k = sum over partitions p of [k] of moebius(p) times the diagram merging
/// top and bottom strands along the blocks of p.
/// Throws LimitError above limits().distinct_idem_limit.
Morphism distinct_idempotent(std::size_t k);

/// (1/|H|) sum of the permutation diagrams of H.
Morphism subgroup_projector(const PermGroup& h);

/// Strandwise merge 2k -> k with blocks {j, k+j, 2k+j}.
Morphism strand_merge(std::size_t k);

/// ind(C[S_k/H]): f = e_k o p_H, mult = f o merge o (f x f), unit = f o eta^k.
AlgebraObject build_induced_algebra(std::size_t k, const PermGroup& h);

/// h x h with componentwise product; two-dimensional invariants.
AlgebraObject componentwise_square();

struct LawCheck {
  bool holds = false;
  /// First differing term (lhs - rhs) when the law fails.
  std::optional<std::pair<Diagram, Scalar>> counterexample;
};

struct AxiomReport {
  LawCheck idempotent;      // f o f = f
  LawCheck absorbs;         // f o m o (f x f) = m and f o u = u
  LawCheck associativity;   // m o (m x f) = m o (f x m)
  LawCheck unit;            // m o (u x f) = f
  LawCheck commutativity;   // m o swap = m
  ComposeStats stats;
  bool all() const {
    return idempotent.holds && absorbs.holds && associativity.holds && unit.holds && commutativity.holds;
  }
};

AxiomReport check_axioms(const AlgebraObject& a);

/// dim Hom(1, A) over Q(t).
std::size_t connectedness(const AlgebraObject& a);

struct PairingCertificate {
  bool nondegenerate = false;
  Morphism phi;                  // endomorphism of the carrier induced by the pairing
  Scalar det;                    // det of left multiplication by phi on End(A)
  std::size_t end_dimension = 0;
  std::optional<Morphism> inverse;  // psi with phi o psi = psi o phi = f
};

/// Nondegeneracy of (x, y) -> eps^k o f o m(x, y), decided by invertibility
/// of the induced endomorphism phi inside End(A).
PairingCertificate pairing_nondegenerate(const AlgebraObject& a);

enum class Verdict { CertifiedSimple, CertifiedNonsimple, Inconclusive };
std::string to_string(Verdict v);

struct SimplicityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t connectedness = 0;
  PairingCertificate pairing;
  /// For nonsimple verdicts: the fiber used as witness and a proper invariant ideal there.
  std::size_t witness_n = 0;
  std::size_t witness_ideal_dim = 0;
};

/// certified-simple iff connected and the pairing is nondegenerate;
/// certified-nonsimple iff connectedness >= 2, confirmed at one fiber.
SimplicityCertificate certify_simple(const AlgebraObject& a);

}  // namespace repst
