#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repst/linalg.hpp"
#include "repst/symgroup.hpp"

namespace repst {

using QVector = std::vector<Rational>;
/// Sparse vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Finite-dimensional commutative algebra over Q with an action of S_n
/// given on a list of group generators.
struct EquivariantAlgebra {
  std::size_t dim = 0;
  std::size_t degree = 0;  // n of S_n
  std::vector<Permutation> group_generators;
  /// products[i] lists (j, b_i * b_j) for the nonzero products.
  std::vector<std::vector<std::pair<std::uint32_t, SparseVector>>> products;
  /// action[g][j] = image of basis vector j under generator g.
  std::vector<std::vector<SparseVector>> action;
  QVector unit;
  std::vector<std::string> labels;

  void set_product(std::size_t i, std::size_t j, SparseVector v);
  const SparseVector* product(std::size_t i, std::size_t j) const;

  QVector multiply(const QVector& x, const QVector& y) const;
  QVector act(std::size_t generator, const QVector& x) const;
  QVector basis_vector(std::size_t i) const;

  /// Empty when the structure is a commutative, associative, unital algebra
  /// on which every generator acts by an algebra automorphism; otherwise a
  /// description of the first violated law.
  std::string validate() const;
};

SparseVector to_sparse(const QVector& v);
QVector to_dense(const SparseVector& v, std::size_t dim);

/// Functions on the left cosets S_n / H with pointwise product and
/// left-translation action. Basis: coset indicators.
EquivariantAlgebra coset_algebra(std::size_t n, const PermGroup& h);

/// A x B with componentwise product; both must use the same generators.
EquivariantAlgebra direct_sum(const EquivariantAlgebra& a, const EquivariantAlgebra& b);

/// Primitive idempotents of a reduced algebra split over Q, obtained by
/// successively splitting with the minimal polynomials of basis elements.
/// Throws DomainError if the algebra is not reduced or not split over Q.
std::vector<QVector> primitive_idempotents(const EquivariantAlgebra& a);

/// Nilradical (kernel of the trace form); empty iff the algebra is reduced.
std::vector<QVector> nilradical(const EquivariantAlgebra& a);

struct SimplicityVerdict {
  bool simple = false;
  bool orbit_route = false;   // transitivity of the action on primitive idempotents
  bool ideal_route = false;   // search over invariant ideals
  std::size_t primitive_count = 0;
  std::size_t orbit_count = 0;
  bool reduced = true;
  std::vector<QVector> witness;  // spans a proper nonzero invariant ideal when not simple
};

/// Runs both deciders and throws ConsistencyError if they disagree.
SimplicityVerdict is_simple_equivariant(const EquivariantAlgebra& a);

struct EquivariantIsomorphism {
  /// Column j is the image of basis vector j of the source, in target coordinates.
  QMatrix matrix;
};

/// Algebra isomorphism intertwining the actions, found by matching primitive
/// idempotents orbit by orbit. Both algebras must share group generators.
std::optional<EquivariantIsomorphism> find_equivariant_isomorphism(const EquivariantAlgebra& source,
                                                                   const EquivariantAlgebra& target);

/// Exact check that m is an equivariant algebra isomorphism source -> target.
bool is_equivariant_isomorphism(const EquivariantAlgebra& source, const EquivariantAlgebra& target,
                                const QMatrix& m);

/// Compares a fiber algebra with C[S_n / (H x S_{n-k})]. Throws DomainError
/// when the dimension is not n! / (|H| (n-k)!).
std::optional<EquivariantIsomorphism> match_fiber_algebra(const EquivariantAlgebra& fiber_algebra, std::size_t n,
                                                          std::size_t k, const PermGroup& h);

}  // namespace repst
