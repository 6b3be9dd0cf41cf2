#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repst/config.hpp"
#include "repst/scalar.hpp"

namespace repst {

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
/// Products compose right to left: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  /// Parses a product of cycles such as "(0 1)(2 3)"; "()" or "" is the identity.
  static Permutation from_cycles(std::size_t n, const std::string& text);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t degree() const { return img_.size(); }
  std::uint8_t operator[](std::size_t i) const { return img_[i]; }
  std::span<const std::uint8_t> images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  /// Cycle lengths in non-increasing order (fixed points included).
  std::vector<std::size_t> cycle_type() const;
  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_cycles() const;
  /// Position in the lexicographic order of S_n.
  std::uint64_t rank() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<std::uint8_t> img_;
};

/// Parses a comma-separated generator list, e.g. "(0 1)(2 3),(0 2)".
std::vector<Permutation> parse_generators(std::size_t n, const std::string& text);
std::string format_generators(std::span<const Permutation> gens);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Finite permutation group with materialized, sorted element list.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t n) { return PermGroup(n, {}); }
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  /// Symmetric group on the points [first, n).
  static PermGroup symmetric_on_tail(std::size_t n, std::size_t first);
  /// H (acting on the first k points) times the symmetric group on the rest.
  static PermGroup young_product(const PermGroup& h, std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  /// c H c^-1
  PermGroup conjugate(const Permutation& c) const;
  std::string generators_text() const { return format_generators(gens_); }

  /// Order plus the multiset of element cycle types; equal for conjugate groups.
  const std::map<std::vector<std::size_t>, std::size_t>& cycle_type_counts() const { return type_counts_; }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
  std::map<std::vector<std::size_t>, std::size_t> type_counts_;
};

/// Some c with c G c^-1 = K, if the two are conjugate in S_n.
std::optional<Permutation> find_conjugator(const PermGroup& g, const PermGroup& k);

/// One representative per conjugacy class of subgroups of S_n, found by
/// cyclic extension from the trivial group. Ordered by group order, then
/// by element list. Throws LimitError above limits().subgroup_degree_limit.
std::vector<PermGroup> subgroups_up_to_conjugacy(std::size_t n);

/// Every subgroup of S_n containing base (not up to conjugacy).
std::vector<PermGroup> subgroups_containing(const PermGroup& base);

/// Standard generators of S_n: (0 1) and (0 1 ... n-1), deduplicated.
std::vector<Permutation> symmetric_generators(std::size_t n);

struct ContainsTimesCase {
  PermGroup group;
  std::size_t k_prime = 0;
  PermGroup factor;       // H' on the first k' points
  Permutation conjugator; // c with c H c^-1 = H' x S_{n-k'}
  bool found = false;
};

struct ContainsTimesReport {
  std::size_t n = 0, k = 0;
  bool pass = false;
  std::vector<ContainsTimesCase> cases;
};

/// Every subgroup H of S_n containing S_{n-k} (on the last n-k points) is
/// conjugate to some H' x S_{n-k'} with k' <= k. Requires n > 2k + 1.
ContainsTimesReport verify_contains_times(std::size_t n, std::size_t k);

/// Multiplicity of the sign representation in C[S_n / H], from fixed-coset
/// counts aggregated over cycle types.
std::size_t sign_multiplicity(std::size_t n, const PermGroup& h);

}  // namespace repst
