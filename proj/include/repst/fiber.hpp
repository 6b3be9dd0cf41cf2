#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "repst/algebras.hpp"
#include "repst/equivariant.hpp"

namespace repst {

/// Sparse matrix of a morphism [a] -> [b] at t = n, acting on (Q^n)^{x a}.
/// Multi-indices use mixed radix with leg 0 most significant.
struct FiberMatrix {
  std::size_t n = 0;
  std::size_t dom_power = 0;
  std::size_t cod_power = 0;
  std::uint64_t rows = 0;  // n^cod_power
  std::uint64_t cols = 0;  // n^dom_power
  std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> entries;

  FiberMatrix() = default;
  FiberMatrix(std::size_t n, std::size_t a, std::size_t b);

  Rational at(std::uint64_t r, std::uint64_t c) const;
  void add(std::uint64_t r, std::uint64_t c, const Rational& v);
  Rational trace() const;

  friend bool operator==(const FiberMatrix&, const FiberMatrix&) = default;
};

/// n^p, throwing LimitError beyond limits().fiber_entry_budget.
std::uint64_t fiber_size(std::size_t n, std::size_t p);

/// Entry (J, I) is 1 iff the labelling (I on the domain, J on the codomain)
/// is constant on every block.
FiberMatrix fiber_diagram(const Diagram& d, std::size_t n);
/// Evaluates coefficients at t = n; throws ArithmeticError at a pole.
FiberMatrix fiber_morphism(const Morphism& f, std::size_t n);

FiberMatrix operator*(const FiberMatrix& x, const FiberMatrix& y);
FiberMatrix kron(const FiberMatrix& x, const FiberMatrix& y);

/// Permutation matrix of sigma in S_n acting diagonally on the a tensor legs.
FiberMatrix leg_action(const Permutation& sigma, std::size_t a);

/// Commutative Frobenius algebra: an equivariant algebra with a counit whose
/// trace form eps(xy) is nondegenerate.
struct FrobeniusAlgebra {
  EquivariantAlgebra algebra;
  QVector counit;  // eps(b_i)
};

/// Q^n with pointwise product and counit summing the coordinates.
FrobeniusAlgebra pointwise_algebra(std::size_t n);

/// The monoidal functor sending [1] to T and a diagram to the tensor product
/// over its blocks of multiply-then-comultiply maps. Throws DomainError when
/// the trace form is degenerate.
FiberMatrix frobenius_functor(const FrobeniusAlgebra& t, const Diagram& d);

/// Fiber of an algebra object at t = n: basis from the pivot columns of the
/// fiber of f, structure constants and unit from the fibers of m and u, and
/// the S_n action on tensor legs restricted to the image.
/// Throws DomainError("zero carrier ...") when the fiber of f vanishes.
EquivariantAlgebra specialize_algebra(const AlgebraObject& a, std::size_t n);

}  // namespace repst
