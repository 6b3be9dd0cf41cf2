#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "repst/partition.hpp"
#include "repst/scalar.hpp"

namespace repst {

/// Partition diagram a -> b: a set partition of a + b points where
/// 0..a-1 are domain points and a..a+b-1 are codomain points.
struct Diagram {
  std::uint16_t dom = 0;
  std::uint16_t cod = 0;
  SetPartition partition;

  Diagram() = default;
  Diagram(std::size_t a, std::size_t b, SetPartition p);

  /// Diagram from blocks given in the a + b point numbering.
  static Diagram from_blocks(std::size_t a, std::size_t b, const std::vector<std::vector<std::size_t>>& blocks);
  /// The one-block diagram a -> b (the Frobenius structure map phi_{a,b}).
  static Diagram one_block(std::size_t a, std::size_t b);
  /// Endomorphism of [k] sending strand i to strand sigma[i].
  static Diagram permutation(std::span<const std::uint8_t> sigma);

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& x, const Diagram& y) {
    if (auto c = x.dom <=> y.dom; c != 0) return c;
    if (auto c = x.cod <=> y.cod; c != 0) return c;
    return x.partition <=> y.partition;
  }
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept {
    return d.partition.hash() ^ (static_cast<std::size_t>(d.dom) * 0x9e3779b97f4a7c15ull);
  }
};

/// Result of composing two diagrams: the diagram rho . pi and the number of
/// blocks of the join lying entirely in the middle tier.
struct DiagramProduct {
  Diagram diagram;
  std::size_t closed_blocks = 0;
};

/// rho o pi for pi: a -> b and rho: b -> c, before the t^d factor.
DiagramProduct compose_diagrams(const Diagram& rho, const Diagram& pi);
Diagram tensor_diagrams(const Diagram& f, const Diagram& g);

/// Sparse Q(t)-linear combination of diagrams with fixed boundary.
class Morphism {
 public:
  using Terms = std::unordered_map<Diagram, Scalar, DiagramHash>;

  Morphism() = default;
  Morphism(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod) {}
  Morphism(const Diagram& d, Scalar coeff = Scalar(1));

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of d (zero if absent).
  Scalar coeff(const Diagram& d) const;
  /// Adds c * d, dropping the term if it cancels.
  void add_term(const Diagram& d, const Scalar& c);
  /// Terms sorted by diagram, for deterministic output.
  std::vector<std::pair<Diagram, Scalar>> sorted_terms() const;

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const Scalar& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const Scalar& c, Morphism m) { return m *= c; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  Terms terms_;
};

/// Statistics collected during a composition.
struct ComposeStats {
  std::size_t products = 0;         // diagram pairs composed
  std::size_t max_closed_blocks = 0;
};

Morphism identity(std::size_t a);
/// rho o pi. Throws DomainError when pi.cod() != rho.dom().
Morphism compose(const Morphism& rho, const Morphism& pi, ComposeStats* stats = nullptr);
Morphism tensor(const Morphism& f, const Morphism& g);
/// Crossing a + b -> b + a.
Morphism symmetry(std::size_t a, std::size_t b);

enum class CupCap { Cup, Cap };
/// cup: 0 -> 2k pairing point i with 2k-1-i; cap: 2k -> 0 likewise.
Morphism cup_cap(std::size_t k, CupCap direction);

/// Categorical trace: closes each strand i with k + i and weights every
/// diagram by t^(blocks of the closure).
Scalar closure_trace(const Morphism& f);

struct FrobeniusGenerators {
  Morphism mu;       // 2 -> 1
  Morphism eta;      // 0 -> 1
  Morphism delta;    // 1 -> 2
  Morphism epsilon;  // 1 -> 0
};
FrobeniusGenerators frobenius_generators();

/// Evaluates every coefficient at t = x (base change along Q(t) -> Q).
Morphism specialize_coefficients(const Morphism& f, const Rational& x);

/// Composes a chain right-to-left: chain({f, g, h}) = f o g o h.
Morphism compose_chain(std::initializer_list<std::reference_wrapper<const Morphism>> chain);

}  // namespace repst
