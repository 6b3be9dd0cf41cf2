#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repst/diagram.hpp"
#include "repst/linalg.hpp"

namespace repst {

/// Object of the Karoubi envelope: the image of an idempotent on [k].
struct KObject {
  std::size_t ambient = 0;
  Morphism idem;

  KObject() : idem(identity(0)) {}
  KObject(std::size_t k, Morphism e);

  /// ([k], id)
  static KObject tensor_power(std::size_t k) { return KObject(k, identity(k)); }
  /// The monoidal unit ([0], id).
  static KObject unit() { return tensor_power(0); }
  /// The generating object h = ([1], id).
  static KObject generator() { return tensor_power(1); }

  bool is_idempotent() const { return compose(idem, idem) == idem; }
};

KObject tensor(const KObject& x, const KObject& y);

/// Coordinates of a list of morphisms with common boundary: one row per
/// diagram in the union of their supports (sorted), one column per morphism.
Matrix coordinate_matrix(const std::vector<Morphism>& ms, std::vector<Diagram>* row_diagrams = nullptr);

/// All diagrams a -> b in canonical order. Throws LimitError when Bell(a+b)
/// exceeds limits().hom_basis_limit.
std::vector<Diagram> diagram_basis(std::size_t a, std::size_t b);

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dimension = 0;
};

/// Basis of idem_Y o Hom([k_X], [k_Y]) o idem_X: a maximal independent subset
/// of the images of all diagrams, scanned in canonical order.
HomSpace hom_space(const KObject& x, const KObject& y);

/// Categorical dimension, the closure trace of the idempotent.
Scalar dimension_poly(const KObject& x);

/// Some v in Hom(Y, X) with v o u = idem_X, re-verified before returning.
/// Throws DomainError unless idem_Y o u o idem_X = u.
std::optional<Morphism> is_split_mono(const Morphism& u, const KObject& x, const KObject& y);

/// True when idem_X lies outside span{b o a : a in Hom(X, Y), b in Hom(Y, X)};
/// this rules out any split mono X -> Y.
bool certify_no_split_mono(const KObject& x, const KObject& y);

struct LevelAttempt {
  std::size_t k_prime = 0;
  std::size_t hom_dimension = 0;
  std::size_t random_trials = 0;
  bool embedded = false;             // retraction found and verified
  bool certified_impossible = false; // exhaustive linear check ruled it out
};

struct LevelReport {
  std::size_t bound = 0;
  bool certified_upper = false;  // retraction found at `bound`
  bool certified_lower = false;  // every k' < bound ruled out exhaustively
  std::vector<LevelAttempt> attempts;
  std::optional<Morphism> embedding;
  std::optional<Morphism> retraction;
};

struct LevelOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t trials = 3;
  std::size_t exhaustive_max = 2;  // largest k' for the exhaustive check
};

/// Least k' <= ambient for which a random u in Hom(X, ([k'], id)) admits a
/// verified retraction. Failures at k' are certified only when the
/// exhaustive check applies; otherwise the answer is an upper bound.
LevelReport level_upper_bound(const KObject& x, const LevelOptions& options = {});

}  // namespace repst
