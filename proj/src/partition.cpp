#include "repst/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace repst {

namespace {

void check_ground(std::size_t n) {
  if (n > limits().max_ground)
    throw LimitError("partition ground size " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limits().max_ground));
}

// Union-find over a small number of points.
struct Dsu {
  std::vector<std::uint16_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint16_t find(std::uint16_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint16_t a, std::uint16_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

SetPartition SetPartition::singletons(std::size_t n) {
  check_ground(n);
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{0});
  return PartitionBuilder::adopt(std::move(labels), n);
}

SetPartition SetPartition::one_block(std::size_t n) {
  check_ground(n);
  return PartitionBuilder::adopt(std::vector<Label>(n, 0), n == 0 ? 0 : 1);
}

SetPartition SetPartition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  check_ground(n);
  std::vector<int> labels(n, -1);
  int id = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw DomainError("empty block in set partition");
    for (std::size_t i : block) {
      if (i >= n) throw DomainError("block index " + std::to_string(i) + " out of range");
      if (labels[i] != -1) throw DomainError("index " + std::to_string(i) + " appears in two blocks");
      labels[i] = id;
    }
    ++id;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (labels[i] == -1) throw DomainError("index " + std::to_string(i) + " not covered by any block");
  return from_labels(labels);
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  check_ground(labels.size());
  std::vector<int> remap;
  std::vector<Label> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int l = labels[i];
    if (l < 0) throw DomainError("negative block label");
    if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(l + 1, -1);
    if (remap[l] == -1) remap[l] = next++;
    out[i] = static_cast<Label>(remap[l]);
  }
  return PartitionBuilder::adopt(std::move(out), static_cast<std::size_t>(next));
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(num_blocks_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> SetPartition::block_sizes() const {
  std::vector<std::size_t> out(num_blocks_, 0);
  for (Label l : labels_) ++out[l];
  return out;
}

bool SetPartition::refines(const SetPartition& other) const {
  if (other.ground_size() != ground_size()) return false;
  std::vector<int> image(num_blocks_, -1);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    int& img = image[labels_[i]];
    if (img == -1)
      img = other.labels_[i];
    else if (img != other.labels_[i])
      return false;
  }
  return true;
}

std::size_t SetPartition::hash() const {
  std::size_t h = 1469598103934665603ull ^ labels_.size();
  for (Label l : labels_) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h;
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size())
    throw DomainError("join: ground sizes differ (" + std::to_string(p.ground_size()) + " vs " +
                      std::to_string(q.ground_size()) + ")");
  const std::size_t n = p.ground_size();
  Dsu dsu(n);
  std::vector<int> first_p(p.num_blocks(), -1), first_q(q.num_blocks(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    int& fp = first_p[p.block_of(i)];
    if (fp == -1) fp = static_cast<int>(i);
    else dsu.unite(static_cast<std::uint16_t>(fp), static_cast<std::uint16_t>(i));
    int& fq = first_q[q.block_of(i)];
    if (fq == -1) fq = static_cast<int>(i);
    else dsu.unite(static_cast<std::uint16_t>(fq), static_cast<std::uint16_t>(i));
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = dsu.find(static_cast<std::uint16_t>(i));
  return SetPartition::from_labels(labels);
}

SetPartition restrict(const SetPartition& p, std::span<const std::size_t> keep) {
  std::vector<int> labels;
  labels.reserve(keep.size());
  for (std::size_t i : keep) {
    if (i >= p.ground_size()) throw DomainError("restrict: index out of range");
    labels.push_back(p.block_of(i));
  }
  return SetPartition::from_labels(labels);
}

long long moebius(const SetPartition& p) {
  long long result = 1;
  for (std::size_t size : p.block_sizes()) {
    long long f = 1;
    for (std::size_t j = 2; j < size; ++j) f *= static_cast<long long>(j);
    result *= (size % 2 == 1) ? f : -f;
  }
  return result;
}

void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit) {
  if (n > limits().enumeration_limit)
    throw LimitError("enumerate_partitions: n = " + std::to_string(n) + " exceeds enumeration limit " +
                     std::to_string(limits().enumeration_limit));
  if (n == 0) {
    visit(SetPartition{});
    return;
  }
  // Restricted growth strings in lexicographic order; maxes[i] = max(label[0..i]).
  std::vector<SetPartition::Label> labels(n, 0);
  std::vector<SetPartition::Label> maxes(n, 0);
  while (true) {
    visit(PartitionBuilder::adopt(labels, static_cast<std::size_t>(maxes[n - 1]) + 1));
    std::size_t i = n - 1;
    while (i > 0 && labels[i] == maxes[i - 1] + 1) --i;
    if (i == 0) return;
    ++labels[i];
    maxes[i] = std::max(maxes[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

unsigned long long bell_number(std::size_t n) {
  std::vector<unsigned long long> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace repst
