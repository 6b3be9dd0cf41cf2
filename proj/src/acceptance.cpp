#include "repst/acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace repst {

SetPartition random_partition(std::size_t m, std::mt19937_64& rng) {
  std::vector<int> labels(m);
  for (auto& l : labels) l = static_cast<int>(rng() % std::max<std::size_t>(m, 1));
  return SetPartition::from_labels(labels);
}

namespace {

Json status(bool pass) { return pass ? "pass" : "fail"; }

std::string term_text(const std::optional<std::pair<Diagram, Scalar>>& t) {
  if (!t) return "";
  std::string s = t->second.to_string() + " * [";
  bool first = true;
  for (const auto& b : t->first.partition.blocks()) {
    s += first ? "{" : ",{";
    first = false;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s + "]";
}

Scalar falling_factorial_over(std::size_t k, std::size_t order) {
  Poly p(1);
  for (std::size_t i = 0; i < k; ++i) p = p * (Poly::t() - Poly(static_cast<long>(i)));
  return Scalar(p * Rational(1, static_cast<unsigned long>(order)));
}

Integer falling_count(std::size_t n, std::size_t k) {
  if (n < k) return 0;
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

std::vector<PermGroup> all_subgroups(std::size_t k) { return subgroups_containing(PermGroup::trivial(k)); }

// ------------------------------------------------------------------ 1

Json criterion_functoriality(std::uint64_t seed, bool& pass) {
  std::size_t exhaustive = 0, exhaustive_fail = 0;
  for (std::size_t n : {2, 3, 4})
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t c = 0; c <= 2; ++c) {
          const auto pis = diagram_basis(a, b), rhos = diagram_basis(b, c);
          std::vector<FiberMatrix> fp, fr;
          for (const auto& d : pis) fp.push_back(fiber_diagram(d, n));
          for (const auto& d : rhos) fr.push_back(fiber_diagram(d, n));
          for (std::size_t i = 0; i < pis.size(); ++i)
            for (std::size_t j = 0; j < rhos.size(); ++j) {
              ++exhaustive;
              if (fiber_morphism(compose(Morphism(rhos[j]), Morphism(pis[i])), n) != fr[j] * fp[i]) ++exhaustive_fail;
            }
        }
  std::mt19937_64 rng(seed);
  std::size_t random_fail = 0;
  const std::size_t random_pairs = 500;
  for (std::size_t trial = 0; trial < random_pairs; ++trial) {
    const std::size_t a = rng() % 4, b = rng() % 4, c = rng() % 4;
    const Diagram pi(a, b, random_partition(a + b, rng));
    const Diagram rho(b, c, random_partition(b + c, rng));
    if (fiber_morphism(compose(Morphism(rho), Morphism(pi)), 5) != fiber_diagram(rho, 5) * fiber_diagram(pi, 5))
      ++random_fail;
  }
  pass = exhaustive_fail == 0 && random_fail == 0;
  return Json{{"exhaustive_pairs", exhaustive}, {"exhaustive_failures", exhaustive_fail},
              {"random_pairs", random_pairs}, {"random_n", 5}, {"random_failures", random_fail}};
}

// ------------------------------------------------------------------ 2

Json criterion_frobenius(bool& pass) {
  const auto g = frobenius_generators();
  const Morphism id1 = identity(1);
  Json laws = Json::object();
  auto law = [&](const char* name, const Morphism& lhs, const Morphism& rhs) {
    const bool ok = lhs == rhs;
    laws[name] = ok;
    pass = pass && ok;
  };
  pass = true;
  law("frobenius_left", compose(tensor(id1, g.mu), tensor(g.delta, id1)), compose(g.delta, g.mu));
  law("frobenius_right", compose(tensor(g.mu, id1), tensor(id1, g.delta)), compose(g.delta, g.mu));
  law("associativity", compose(g.mu, tensor(g.mu, id1)), compose(g.mu, tensor(id1, g.mu)));
  law("coassociativity", compose(tensor(g.delta, id1), g.delta), compose(tensor(id1, g.delta), g.delta));
  law("unit", compose(g.mu, tensor(g.eta, id1)), id1);
  law("counit", compose(tensor(g.epsilon, id1), g.delta), id1);
  law("commutativity", compose(g.mu, symmetry(1, 1)), g.mu);
  law("cocommutativity", compose(symmetry(1, 1), g.delta), g.delta);
  law("special", compose(g.mu, g.delta), id1);
  law("dimension_t", compose(g.epsilon, g.eta), Scalar::t() * identity(0));
  return laws;
}

// ------------------------------------------------------------------ 3

Json criterion_idempotents(bool& pass) {
  pass = true;
  Json idem = Json::array();
  for (std::size_t k = 1; k <= 5; ++k) {
    const Morphism e = distinct_idempotent(k);
    ComposeStats stats;
    const bool ok = compose(e, e, &stats) == e;
    const bool t_free = stats.max_closed_blocks == 0;
    pass = pass && ok && t_free;
    idem.push_back(Json{{"k", k}, {"terms", e.size()}, {"idempotent", ok}, {"t_free", t_free}});
  }
  Json commute = Json::array();
  for (std::size_t k = 1; k <= 4; ++k) {
    const Morphism e = distinct_idempotent(k);
    std::size_t groups = 0, failures = 0;
    for (const auto& h : all_subgroups(k)) {
      ++groups;
      const Morphism p = subgroup_projector(h);
      if (compose(p, e) != compose(e, p) || compose(p, p) != p) ++failures;
    }
    pass = pass && failures == 0;
    commute.push_back(Json{{"k", k}, {"subgroups", groups}, {"failures", failures}});
  }
  return Json{{"idempotence", idem}, {"projector_commutation", commute}};
}

// ------------------------------------------------------------------ 4

Json criterion_dimension(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& h : subgroups_up_to_conjugacy(k)) {
      const Morphism f = compose(distinct_idempotent(k), subgroup_projector(h));
      const Scalar trace = closure_trace(f);
      const Scalar expected = falling_factorial_over(k, h.order());
      std::vector<std::pair<Rational, Rational>> points;
      bool counts_ok = true;
      for (std::size_t n = 0; n <= k + 1; ++n) {
        const Rational tr = fiber_morphism(f, n).trace();
        Rational count(falling_count(n, k), Integer(static_cast<unsigned long>(h.order())));
        count.canonicalize();
        counts_ok = counts_ok && tr == count;
        points.emplace_back(Rational(static_cast<unsigned long>(n)), tr);
      }
      const Scalar interpolated = Scalar(interpolate(points, k));
      const bool ok = trace == expected && interpolated == expected && counts_ok;
      pass = pass && ok;
      rows.push_back(Json{{"k", k}, {"subgroup", h.generators_text()}, {"order", h.order()},
                          {"closure_trace", trace.to_string()}, {"interpolated", interpolated.to_string()},
                          {"fiber_counts_match", counts_ok}, {"pass", ok}});
    }
  return rows;
}

// ------------------------------------------------------------------ 5

Json law_json(const LawCheck& c) {
  Json j{{"holds", c.holds}};
  if (c.counterexample) j["counterexample"] = term_text(c.counterexample);
  return j;
}

Json criterion_axioms(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& h : all_subgroups(k)) {
      const auto a = build_induced_algebra(k, h);
      const auto r = check_axioms(a);
      pass = pass && r.all();
      rows.push_back(Json{{"k", k},
                          {"subgroup", h.generators_text()},
                          {"associativity", r.associativity.holds},
                          {"unit", r.unit.holds},
                          {"commutativity", r.commutativity.holds},
                          {"structure_on_carrier", r.absorbs.holds && r.idempotent.holds},
                          {"diagram_products", r.stats.products}});
    }
  // Negative controls: each must be caught by the corresponding law.
  Json controls = Json::object();
  {
    auto a = build_induced_algebra(2, PermGroup::symmetric(2));
    const auto last = a.mult.sorted_terms().back();
    a.mult.add_term(last.first, -last.second);
    const auto r = check_axioms(a);
    controls["dropped_mult_term"] = law_json(r.associativity);
    pass = pass && !r.associativity.holds && r.associativity.counterexample;
  }
  {
    auto a = build_induced_algebra(2, PermGroup::trivial(2));
    const auto last = a.unit.sorted_terms().back();
    a.unit.add_term(last.first, -last.second);
    const auto r = check_axioms(a);
    controls["dropped_unit_term"] = law_json(r.unit);
    pass = pass && !r.unit.holds && r.unit.counterexample;
  }
  {
    auto a = build_induced_algebra(1, PermGroup::trivial(1));
    // Adds x (x) y -> x eps(y), which is not symmetric.
    a.mult += Morphism(Diagram::from_blocks(2, 1, {{0, 2}, {1}}));
    const auto r = check_axioms(a);
    controls["asymmetric_mult"] = law_json(r.commutativity);
    pass = pass && !r.commutativity.holds && r.commutativity.counterexample;
  }
  return Json{{"algebras", rows}, {"negative_controls", controls}};
}

// ------------------------------------------------------------------ 6

Json criterion_simplicity(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& h : all_subgroups(k)) {
      const auto c = certify_simple(build_induced_algebra(k, h));
      const bool ok = c.verdict == Verdict::CertifiedSimple && c.connectedness == 1;
      pass = pass && ok;
      rows.push_back(Json{{"k", k}, {"subgroup", h.generators_text()}, {"verdict", to_string(c.verdict)},
                          {"connectedness", c.connectedness}, {"end_dimension", c.pairing.end_dimension},
                          {"pairing_det", c.pairing.det.to_string()}});
    }
  Json controls = Json::object();
  {
    const auto c = certify_simple(componentwise_square());
    controls["componentwise_square"] = Json{{"verdict", to_string(c.verdict)}, {"connectedness", c.connectedness},
                                            {"witness_n", c.witness_n}, {"witness_ideal_dim", c.witness_ideal_dim}};
    pass = pass && c.verdict == Verdict::CertifiedNonsimple;
  }
  {
    auto a = build_induced_algebra(1, PermGroup::trivial(1));
    a.mult = Morphism(2, 1);
    const auto c = certify_simple(a);
    controls["zero_mult"] = Json{{"verdict", to_string(c.verdict)}, {"pairing_nondegenerate", c.pairing.nondegenerate}};
    pass = pass && c.verdict == Verdict::Inconclusive;
  }
  return Json{{"algebras", rows}, {"controls", controls}};
}

// ------------------------------------------------------------------ 7

Json criterion_fiber_match(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& h : all_subgroups(k)) {
      const auto a = build_induced_algebra(k, h);
      for (std::size_t n = 2 * k + 1; n <= 6; ++n) {
        const auto fib = specialize_algebra(a, n);
        const auto iso = match_fiber_algebra(fib, n, k, h);
        pass = pass && iso.has_value();
        rows.push_back(Json{{"k", k}, {"subgroup", h.generators_text()}, {"n", n}, {"dim", fib.dim},
                            {"isomorphic", iso.has_value()}});
      }
    }
  // Mismatched pair: the trivial-H fiber has the wrong dimension for H = S_2.
  bool rejected = false;
  try {
    const auto fib = specialize_algebra(build_induced_algebra(2, PermGroup::trivial(2)), 5);
    rejected = !match_fiber_algebra(fib, 5, 2, PermGroup::symmetric(2)).has_value();
  } catch (const DomainError&) {
    rejected = true;
  }
  pass = pass && rejected;
  return Json{{"matches", rows}, {"mismatch_rejected", rejected}};
}

// ------------------------------------------------------------------ 8

// Independent count: every subgroup of S_n (n <= 5) is generated by two
// elements; close all pairs and group the results under conjugation.
std::size_t brute_force_class_count(std::size_t n) {
  const auto universe = all_permutations(n);
  std::set<std::vector<Permutation>> groups;
  for (const auto& x : universe)
    for (const auto& y : universe) {
      if (y < x) continue;
      groups.insert(PermGroup(n, {x, y}).elements());
    }
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

Json criterion_classification(bool& pass) {
  pass = true;
  Json rows = Json::array();
  const std::map<std::size_t, std::size_t> expected{{3, 4}, {4, 11}, {5, 19}};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto classes = subgroups_up_to_conjugacy(n);
    const auto again = subgroups_up_to_conjugacy(n);
    const bool stable = classes == again;
    const std::size_t oracle = brute_force_class_count(n);
    std::size_t simple = 0;
    std::vector<EquivariantAlgebra> algebras;
    for (const auto& h : classes) {
      algebras.push_back(coset_algebra(n, h));
      if (is_simple_equivariant(algebras.back()).simple) ++simple;
    }
    std::size_t isomorphic_pairs = 0;
    for (std::size_t i = 0; i < algebras.size(); ++i)
      for (std::size_t j = i + 1; j < algebras.size(); ++j)
        if (algebras[i].dim == algebras[j].dim && find_equivariant_isomorphism(algebras[i], algebras[j]))
          ++isomorphic_pairs;
    auto it = expected.find(n);
    const bool count_ok = classes.size() == oracle && (it == expected.end() || it->second == classes.size());
    const bool ok = stable && count_ok && simple == classes.size() && isomorphic_pairs == 0;
    pass = pass && ok;
    rows.push_back(Json{{"n", n}, {"classes", classes.size()}, {"oracle_classes", oracle}, {"stable", stable},
                        {"simple", simple}, {"isomorphic_distinct_pairs", isomorphic_pairs}});
  }
  Json control;
  {
    const auto one = coset_algebra(3, PermGroup::symmetric(3));
    const auto v = is_simple_equivariant(direct_sum(one, one));
    control = Json{{"simple", v.simple}, {"witness_dim", v.witness.size()}};
    pass = pass && !v.simple && v.witness.size() == 1;
  }
  return Json{{"degrees", rows}, {"direct_sum_control", control}};
}

// ------------------------------------------------------------------ 9

Json criterion_contains_times(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t n = 2 * k + 2; n <= 7; ++n) {
      const auto r = verify_contains_times(n, k);
      pass = pass && r.pass;
      Json cases = Json::array();
      for (const auto& c : r.cases)
        cases.push_back(Json{{"order", c.group.order()}, {"k_prime", c.k_prime},
                             {"factor", c.factor.generators_text()}, {"found", c.found}});
      rows.push_back(Json{{"n", n}, {"k", k}, {"status", status(r.pass)}, {"cases", cases}});
    }
  return rows;
}

// ------------------------------------------------------------------ 10

Json criterion_sign(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto alt = PermGroup::alternating(n);
    std::size_t tested = 0, min_mult = 0;
    bool first = true;
    for (const auto& h : subgroups_up_to_conjugacy(n)) {
      if (!h.is_subgroup_of(alt)) continue;
      const std::size_t m = sign_multiplicity(n, h);
      ++tested;
      min_mult = first ? m : std::min(min_mult, m);
      first = false;
    }
    pass = pass && min_mult >= 1;
    rows.push_back(Json{{"n", n}, {"classes_in_alternating", tested}, {"min_sign_multiplicity", min_mult}});
  }
  Json point = Json::array();
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::size_t m = sign_multiplicity(n, PermGroup::symmetric_on_tail(n, 1));
    pass = pass && m == 0;
    point.push_back(Json{{"n", n}, {"sign_multiplicity", m}});
  }
  return Json{{"alternating_subgroups", rows}, {"point_stabilizer", point}};
}

// ------------------------------------------------------------------ 11

Json criterion_level(std::uint64_t seed, bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& h : all_subgroups(k)) {
      LevelOptions opt;
      opt.seed = seed;
      const auto r = level_upper_bound(build_induced_algebra(k, h).carrier, opt);
      const bool ok = r.bound == k && r.certified_upper && r.certified_lower;
      pass = pass && ok;
      Json attempts = Json::array();
      for (const auto& at : r.attempts)
        attempts.push_back(Json{{"k_prime", at.k_prime}, {"hom_dimension", at.hom_dimension},
                                {"embedded", at.embedded}, {"certified_impossible", at.certified_impossible}});
      rows.push_back(Json{{"k", k}, {"subgroup", h.generators_text()}, {"level", r.bound},
                          {"certified_retraction", r.certified_upper}, {"certified_below", r.certified_lower},
                          {"attempts", attempts}});
    }
  return rows;
}

const char* kTitles[] = {"",
                         "fiber functoriality of composition",
                         "Frobenius laws and dimension t",
                         "distinct-index idempotents and subgroup projectors",
                         "dimension polynomials of induced algebras",
                         "algebra axioms with negative controls",
                         "simplicity certificates",
                         "fiber match with coset algebras",
                         "classification of coset algebras",
                         "subgroups containing a tail symmetric group",
                         "sign-representation obstruction",
                         "level of induced algebras"};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kInProcessCriteria) throw DomainError("unknown criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id];
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: r.details = criterion_functoriality(seed, r.pass); break;
      case 2: r.details = criterion_frobenius(r.pass); break;
      case 3: r.details = criterion_idempotents(r.pass); break;
      case 4: r.details = criterion_dimension(r.pass); break;
      case 5: r.details = criterion_axioms(r.pass); break;
      case 6: r.details = criterion_simplicity(r.pass); break;
      case 7: r.details = criterion_fiber_match(r.pass); break;
      case 8: r.details = criterion_classification(r.pass); break;
      case 9: r.details = criterion_contains_times(r.pass); break;
      case 10: r.details = criterion_sign(r.pass); break;
      case 11: r.details = criterion_level(seed, r.pass); break;
    }
  } catch (const Error& e) {
    r.pass = false;
    r.details = Json{{"error", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json results_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results)
    out.push_back(Json{{"criterion", r.id}, {"title", r.title}, {"status", status(r.pass)}, {"details", r.details}});
  return out;
}

}  // namespace repst
