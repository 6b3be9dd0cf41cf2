#include "repst/karoubi.hpp"

#include <map>
#include <random>

namespace repst {

KObject::KObject(std::size_t k, Morphism e) : ambient(k), idem(std::move(e)) {
  if (idem.dom() != k || idem.cod() != k) throw DomainError("KObject: idempotent is not an endomorphism of [k]");
}

KObject tensor(const KObject& x, const KObject& y) {
  return KObject(x.ambient + y.ambient, tensor(x.idem, y.idem));
}

Matrix coordinate_matrix(const std::vector<Morphism>& ms, std::vector<Diagram>* row_diagrams) {
  std::map<Diagram, std::size_t> rows;
  for (const auto& m : ms)
    for (const auto& [d, c] : m.terms()) rows.emplace(d, 0);
  std::size_t r = 0;
  for (auto& [d, idx] : rows) idx = r++;
  Matrix out(rows.size(), ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j)
    for (const auto& [d, c] : ms[j].terms()) out(rows.at(d), j) = c;
  if (row_diagrams) {
    row_diagrams->clear();
    for (const auto& [d, idx] : rows) row_diagrams->push_back(d);
  }
  return out;
}

std::vector<Diagram> diagram_basis(std::size_t a, std::size_t b) {
  if (a + b > limits().enumeration_limit || bell_number(a + b) > limits().hom_basis_limit)
    throw LimitError("hom basis Bell(" + std::to_string(a + b) + ") exceeds the configured limit");
  std::vector<Diagram> out;
  for_each_partition(a + b, [&](const SetPartition& p) { out.emplace_back(a, b, p); });
  return out;
}

HomSpace hom_space(const KObject& x, const KObject& y) {
  std::vector<Morphism> images;
  for (const auto& d : diagram_basis(x.ambient, y.ambient)) {
    Morphism g = compose(y.idem, compose(Morphism(d), x.idem));
    if (!g.is_zero()) images.push_back(std::move(g));
  }
  HomSpace h;
  if (images.empty()) return h;
  for (std::size_t c : pivot_columns(coordinate_matrix(images))) h.basis.push_back(std::move(images[c]));
  h.dimension = h.basis.size();
  return h;
}

Scalar dimension_poly(const KObject& x) { return closure_trace(x.idem); }

namespace {

// Solves sum_j c_j * ms[j] = target; nullopt when target is outside the span.
std::optional<std::vector<Scalar>> solve_combination(const std::vector<Morphism>& ms, const Morphism& target) {
  std::vector<Morphism> all = ms;
  all.push_back(target);
  Matrix full = coordinate_matrix(all);
  Matrix lhs(full.rows(), ms.size()), rhs(full.rows(), 1);
  for (std::size_t i = 0; i < full.rows(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) lhs(i, j) = full(i, j);
    rhs(i, 0) = full(i, ms.size());
  }
  auto sol = solve(lhs, rhs);
  if (!sol) return std::nullopt;
  std::vector<Scalar> c(ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) c[j] = (*sol)(j, 0);
  return c;
}

Morphism combine(const std::vector<Morphism>& ms, const std::vector<Scalar>& c, std::size_t dom, std::size_t cod) {
  Morphism out(dom, cod);
  for (std::size_t j = 0; j < ms.size(); ++j)
    if (!c[j].is_zero()) out += c[j] * ms[j];
  return out;
}

}  // namespace

std::optional<Morphism> is_split_mono(const Morphism& u, const KObject& x, const KObject& y) {
  if (u.dom() != x.ambient || u.cod() != y.ambient) throw DomainError("is_split_mono: boundary mismatch");
  if (compose(y.idem, compose(u, x.idem)) != u) throw DomainError("is_split_mono: u is not a morphism X -> Y");
  const HomSpace back = hom_space(y, x);
  if (back.basis.empty()) return x.idem.is_zero() ? std::optional<Morphism>(Morphism(y.ambient, x.ambient)) : std::nullopt;
  std::vector<Morphism> composites;
  for (const auto& b : back.basis) composites.push_back(compose(b, u));
  auto c = solve_combination(composites, x.idem);
  if (!c) return std::nullopt;
  Morphism v = combine(back.basis, *c, y.ambient, x.ambient);
  if (compose(v, u) != x.idem) throw ConsistencyError("is_split_mono: retraction failed verification");
  return v;
}

bool certify_no_split_mono(const KObject& x, const KObject& y) {
  if (x.idem.is_zero()) return false;
  const HomSpace to = hom_space(x, y), back = hom_space(y, x);
  std::vector<Morphism> products;
  for (const auto& b : back.basis)
    for (const auto& a : to.basis) {
      Morphism p = compose(b, a);
      if (!p.is_zero()) products.push_back(std::move(p));
    }
  if (products.empty()) return true;
  return !solve_combination(products, x.idem).has_value();
}

LevelReport level_upper_bound(const KObject& x, const LevelOptions& options) {
  LevelReport report;
  std::mt19937_64 rng(options.seed);
  bool all_certified = true;
  for (std::size_t kp = 0; kp <= x.ambient; ++kp) {
    const KObject y = KObject::tensor_power(kp);
    LevelAttempt attempt;
    attempt.k_prime = kp;
    const HomSpace hom = hom_space(x, y);
    attempt.hom_dimension = hom.dimension;
    for (std::size_t trial = 0; trial < options.trials && hom.dimension > 0; ++trial) {
      ++attempt.random_trials;
      Morphism u(x.ambient, kp);
      for (const auto& b : hom.basis) {
        const long c = static_cast<long>(rng() % 19) - 9;
        if (c != 0) u += Scalar(c) * b;
      }
      if (u.is_zero()) continue;
      if (auto v = is_split_mono(u, x, y)) {
        attempt.embedded = true;
        report.embedding = std::move(u);
        report.retraction = std::move(*v);
        break;
      }
    }
    if (!attempt.embedded && kp == x.ambient) {
      // X is a summand of its own ambient power via idem_X.
      attempt.embedded = true;
      report.embedding = x.idem;
      report.retraction = x.idem;
    }
    if (!attempt.embedded && kp <= options.exhaustive_max) attempt.certified_impossible = certify_no_split_mono(x, y);
    report.attempts.push_back(attempt);
    if (attempt.embedded) {
      report.bound = kp;
      report.certified_upper = true;
      report.certified_lower = all_certified;
      return report;
    }
    all_certified = all_certified && attempt.certified_impossible;
  }
  return report;
}

}  // namespace repst
