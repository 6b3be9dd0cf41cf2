#include <doctest.h>

#include <algorithm>
#include <set>

#include "repst/equivariant.hpp"
#include "repst/symgroup.hpp"

using namespace repst;

namespace {

// Subgroups generated by at most two elements, up to conjugacy by brute force.
// In degree <= 5 every subgroup is 2-generated.
std::size_t pair_closure_class_count(std::size_t n) {
  const auto universe = all_permutations(n);
  std::set<std::vector<Permutation>> groups;
  for (const auto& x : universe)
    for (const auto& y : universe)
      if (!(y < x)) groups.insert(PermGroup(n, {x, y}).elements());
  std::set<std::vector<Permutation>> seen;
  std::size_t classes = 0;
  for (const auto& g : groups) {
    if (seen.count(g)) continue;
    ++classes;
    for (const auto& c : universe) {
      std::vector<Permutation> conj;
      for (const auto& e : g) conj.push_back(c * e * c.inverse());
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  }
  return classes;
}

// Multiplicity of the sign in C[S_n/H] as (1/n!) sum_g sign(g) #{cosets fixed by g},
// counting fixed cosets directly.
Rational sign_multiplicity_by_cosets(std::size_t n, const PermGroup& h) {
  const auto g_all = all_permutations(n);
  std::vector<Permutation> reps;
  std::set<Permutation> covered;
  for (const auto& g : g_all) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& x : h.elements()) covered.insert(g * x);
  }
  Rational total = 0;
  for (const auto& g : g_all) {
    long fixed = 0;
    for (const auto& r : reps)
      if (h.contains(r.inverse() * g * r)) ++fixed;
    total += g.sign() * fixed;
  }
  return total / Rational(static_cast<long>(g_all.size()));
}

}  // namespace

TEST_CASE("permutations") {
  const auto p = Permutation::from_cycles(4, "(0 1 2)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p.sign() == 1);
  CHECK(p.to_cycles() == "(0 1 2)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 1});
  CHECK(Permutation::transposition(3, 0, 2).sign() == -1);
  const auto all = all_permutations(4);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].rank() == i);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 3)"), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1"), DomainError);
  CHECK(parse_generators(4, "(0 1)(2 3),(0 2)").size() == 2);
}

TEST_CASE("group orders") {
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK(PermGroup::symmetric_on_tail(5, 2).order() == 6);
  CHECK(PermGroup::young_product(PermGroup::symmetric(2), 5).order() == 12);
  CHECK(PermGroup::alternating(4).is_subgroup_of(PermGroup::symmetric(4)));
}

TEST_CASE("subgroup classes against pair closure") {
  const std::map<std::size_t, std::size_t> known{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 19}};
  for (const auto& [n, count] : known) {
    const auto classes = subgroups_up_to_conjugacy(n);
    CHECK(classes.size() == count);
    CHECK(classes.size() == pair_closure_class_count(n));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) CHECK_FALSE(find_conjugator(classes[i], classes[j]));
  }
}

TEST_CASE("subgroup classes of S_6") { CHECK(subgroups_up_to_conjugacy(6).size() == 56); }

TEST_CASE("classification respects the degree limit") {
  const Limits saved = limits();
  Limits l = saved;
  l.subgroup_degree_limit = 3;
  set_limits(l);
  CHECK_THROWS_AS(subgroups_up_to_conjugacy(4), LimitError);
  set_limits(saved);
}

TEST_CASE("conjugators") {
  const PermGroup a(4, {Permutation::from_cycles(4, "(0 1)")});
  const PermGroup b(4, {Permutation::from_cycles(4, "(2 3)")});
  auto c = find_conjugator(a, b);
  REQUIRE(c);
  CHECK(a.conjugate(*c) == b);
  CHECK_FALSE(find_conjugator(a, PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)")})));
}

TEST_CASE("subgroups containing a tail symmetric group") {
  // Over S_{n-1}: only S_{n-1} and S_n.
  CHECK(subgroups_containing(PermGroup::symmetric_on_tail(5, 1)).size() == 2);
  CHECK(subgroups_containing(PermGroup::symmetric(4)).size() == 1);
}

TEST_CASE("contains-times") {
  const auto r51 = verify_contains_times(5, 1);
  CHECK(r51.pass);
  REQUIRE(r51.cases.size() == 2);
  std::set<std::size_t> orders;
  for (const auto& c : r51.cases) {
    CHECK(c.found);
    CHECK(c.k_prime <= 1);
    orders.insert(c.group.order());
  }
  CHECK(orders == std::set<std::size_t>{24, 120});

  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{6, 2}, {4, 1}, {7, 2}, {3, 0}}) {
    const auto r = verify_contains_times(n, k);
    CHECK(r.pass);
    for (const auto& c : r.cases) {
      // Independent check of the conjugation identity.
      const auto target = PermGroup::young_product(c.factor, n);
      CHECK(c.group.conjugate(c.conjugator) == target);
      CHECK(c.k_prime <= k);
    }
  }
  CHECK_THROWS_AS(verify_contains_times(3, 1), DomainError);
}

TEST_CASE("sign multiplicity against coset counting") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& h : subgroups_up_to_conjugacy(n)) {
      const std::size_t m = sign_multiplicity(n, h);
      CHECK(Rational(static_cast<long>(m)) == sign_multiplicity_by_cosets(n, h));
      // Frobenius reciprocity: the sign restricted to H is trivial iff H <= A_n.
      CHECK(m == (h.is_subgroup_of(PermGroup::alternating(n)) ? 1u : 0u));
    }
  CHECK(sign_multiplicity(6, PermGroup::symmetric_on_tail(6, 1)) == 0);
}

TEST_CASE("coset algebras") {
  const auto a = coset_algebra(3, PermGroup::trivial(3));
  CHECK(a.dim == 6);
  CHECK(a.validate().empty());
  const auto b = coset_algebra(4, PermGroup::symmetric_on_tail(4, 1));
  CHECK(b.dim == 4);
  CHECK(b.validate().empty());
  CHECK(coset_algebra(4, PermGroup::symmetric(4)).dim == 1);
  CHECK_THROWS_AS(coset_algebra(4, PermGroup::symmetric(3)), DomainError);
}
