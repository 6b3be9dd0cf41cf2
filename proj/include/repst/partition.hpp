#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "repst/config.hpp"

namespace repst {

/// Set partition of {0, ..., n-1}.
///
/// Stored as a restricted growth string: label[i] is the index of the block
/// containing i, and blocks are numbered in order of their least element.
/// This is exactly the canonical form "ascending within blocks, blocks ordered
/// by least element", so two partitions are equal iff their labels are.
class SetPartition {
 public:
  using Label = std::uint8_t;

  SetPartition() = default;

  /// All-singletons partition on n points.
  static SetPartition singletons(std::size_t n);
  /// One block containing every point (empty partition when n == 0).
  static SetPartition one_block(std::size_t n);
  /// Builds from explicit blocks; validates disjointness and coverage.
  static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  /// Builds from an arbitrary block labelling and canonicalizes it.
  static SetPartition from_labels(std::span<const int> labels);

  std::size_t ground_size() const { return labels_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  Label block_of(std::size_t i) const { return labels_[i]; }
  std::span<const Label> labels() const { return labels_; }

  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;

  /// True when every block of *this lies inside a block of other.
  bool refines(const SetPartition& other) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }

  std::size_t hash() const;

 private:
  friend class PartitionBuilder;
  std::vector<Label> labels_;
  std::size_t num_blocks_ = 0;
};

/// Internal helper for code that produces canonical label strings directly.
class PartitionBuilder {
 public:
  static SetPartition adopt(std::vector<SetPartition::Label> canonical_labels, std::size_t num_blocks) {
    SetPartition p;
    p.labels_ = std::move(canonical_labels);
    p.num_blocks_ = num_blocks;
    return p;
  }
};

/// Finest common coarsening.
SetPartition join(const SetPartition& p, const SetPartition& q);

/// Partition induced on the listed points, relabelled 0..keep.size()-1.
SetPartition restrict(const SetPartition& p, std::span<const std::size_t> keep);

/// Moebius function of the partition lattice from the bottom element to p:
/// product over blocks B of (-1)^(|B|-1) (|B|-1)!.
long long moebius(const SetPartition& p);

/// Calls visit for every set partition of n points, in increasing label order.
/// Throws LimitError when n exceeds limits().enumeration_limit.
void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit);

/// All set partitions of n points (Bell(n) of them), canonical order.
std::vector<SetPartition> enumerate_partitions(std::size_t n);

/// Bell number B(n) computed by the Bell triangle.
unsigned long long bell_number(std::size_t n);

}  // namespace repst

template <>
struct std::hash<repst::SetPartition> {
  std::size_t operator()(const repst::SetPartition& p) const noexcept { return p.hash(); }
};
