#include <doctest.h>

#include <map>
#include <random>

#include "repst/partition.hpp"

using namespace repst;

namespace {

SetPartition P(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
  return SetPartition::from_blocks(n, blocks);
}

// B(n+1) = sum_k C(n, k) B(k)
std::vector<unsigned long long> bell_by_recurrence(std::size_t max) {
  std::vector<unsigned long long> b{1};
  for (std::size_t n = 0; n < max; ++n) {
    unsigned long long s = 0, binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      s += binom * b[k];
      binom = binom * (n - k) / (k + 1);
    }
    b.push_back(s);
  }
  return b;
}

SetPartition random_partition(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> labels(n);
  for (auto& l : labels) l = static_cast<int>(rng() % n);
  return SetPartition::from_labels(labels);
}

}  // namespace

TEST_CASE("canonical form orders blocks by least element") {
  const auto p = P(4, {{3, 1}, {2, 0}});
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  CHECK(p == SetPartition::from_labels(std::vector<int>{7, 5, 7, 5}));
  CHECK_THROWS_AS(P(3, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(P(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(P(3, {{0, 1}, {}, {2}}), DomainError);
}

TEST_CASE("join") {
  const auto q = P(3, {{0, 2}, {1}});
  CHECK(join(SetPartition::singletons(3), q) == q);
  CHECK(join(P(3, {{0, 1}, {2}}), P(3, {{1, 2}, {0}})) == SetPartition::one_block(3));
  CHECK(join(q, q) == q);
  CHECK_THROWS_AS(join(q, SetPartition::singletons(4)), DomainError);
}

TEST_CASE("restrict") {
  const std::vector<std::size_t> keep02{0, 2}, keep13{1, 3}, keep03{0, 3}, none{};
  CHECK(restrict(SetPartition::one_block(3), keep02) == SetPartition::one_block(2));
  CHECK(restrict(SetPartition::singletons(4), keep13) == SetPartition::singletons(2));
  CHECK(restrict(P(4, {{0, 1}, {2, 3}}), keep03) == SetPartition::singletons(2));
  CHECK(restrict(P(4, {{0, 1}, {2, 3}}), none).ground_size() == 0);
}

TEST_CASE("enumeration counts match the Bell recurrence") {
  const auto bell = bell_by_recurrence(12);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(6).size() == 203);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(bell_number(n) == bell[n]);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == bell[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  Limits l = limits();
  l.enumeration_limit = 4;
  const Limits saved = limits();
  set_limits(l);
  CHECK_THROWS_AS(enumerate_partitions(5), LimitError);
  set_limits(saved);
}

TEST_CASE("moebius closed form agrees with the defining recurrence") {
  CHECK(moebius(SetPartition::singletons(5)) == 1);
  CHECK(moebius(SetPartition::one_block(2)) == -1);
  CHECK(moebius(SetPartition::one_block(3)) == 2);
  for (std::size_t n = 1; n <= 8; ++n) {
    // mu(0, p) = -sum_{q < p} mu(0, q), processed from finest to coarsest.
    auto all = enumerate_partitions(n);
    std::stable_sort(all.begin(), all.end(),
                     [](const SetPartition& a, const SetPartition& b) { return a.num_blocks() > b.num_blocks(); });
    std::map<SetPartition, long long> mu;
    bool ok = true;
    for (const auto& p : all) {
      long long s = 0;
      for (const auto& [q, v] : mu)
        if (q.refines(p)) s += v;
      const long long value = p.num_blocks() == n ? 1 : -s;
      mu[p] = value;
      ok = ok && value == moebius(p);
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("join lattice laws on random inputs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto p = random_partition(n, rng), q = random_partition(n, rng), r = random_partition(n, rng);
    CHECK(join(join(p, q), r) == join(p, join(q, r)));
    CHECK(join(p, q) == join(q, p));
    CHECK(join(p, p) == p);
    CHECK(p.refines(join(p, q)));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) keep.push_back(i);
    const auto lhs = restrict(join(p, q), keep);
    const auto rhs = join(restrict(p, keep), restrict(q, keep));
    CHECK(rhs.refines(lhs));
  }
}
