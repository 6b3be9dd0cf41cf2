#include "repst/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace repst {

SparseVector to_sparse(const QVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

QVector to_dense(const SparseVector& v, std::size_t dim) {
  QVector out(dim, Rational(0));
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

void EquivariantAlgebra::set_product(std::size_t i, std::size_t j, SparseVector v) {
  if (products.size() < dim) products.resize(dim);
  auto& row = products[i];
  auto it = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == j; });
  if (v.empty()) {
    if (it != row.end()) row.erase(it);
    return;
  }
  if (it != row.end()) it->second = std::move(v);
  else row.emplace_back(static_cast<std::uint32_t>(j), std::move(v));
}

const SparseVector* EquivariantAlgebra::product(std::size_t i, std::size_t j) const {
  if (i >= products.size()) return nullptr;
  for (const auto& [col, v] : products[i])
    if (col == j) return &v;
  return nullptr;
}

QVector EquivariantAlgebra::multiply(const QVector& x, const QVector& y) const {
  QVector out(dim, Rational(0));
  for (std::size_t i = 0; i < dim && i < products.size(); ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, v] : products[i]) {
      if (y[j] == 0) continue;
      const Rational c = x[i] * y[j];
      for (const auto& [l, val] : v) out[l] += c * val;
    }
  }
  return out;
}

QVector EquivariantAlgebra::act(std::size_t generator, const QVector& x) const {
  QVector out(dim, Rational(0));
  const auto& cols = action.at(generator);
  for (std::size_t j = 0; j < dim; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, val] : cols[j]) out[i] += x[j] * val;
  }
  return out;
}

QVector EquivariantAlgebra::basis_vector(std::size_t i) const {
  QVector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

std::string EquivariantAlgebra::validate() const {
  for (std::size_t i = 0; i < dim; ++i) {
    auto bi = basis_vector(i);
    if (multiply(unit, bi) != bi) return "unit law fails on basis vector " + std::to_string(i);
    for (std::size_t j = i + 1; j < dim; ++j)
      if (multiply(bi, basis_vector(j)) != multiply(basis_vector(j), bi))
        return "commutativity fails on (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto bij = multiply(basis_vector(i), basis_vector(j));
      for (std::size_t l = 0; l < dim; ++l)
        if (multiply(bij, basis_vector(l)) != multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(l))))
          return "associativity fails on (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(l) + ")";
    }
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (act(g, unit) != unit) return "generator " + std::to_string(g) + " does not fix the unit";
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        auto lhs = act(g, multiply(basis_vector(i), basis_vector(j)));
        auto rhs = multiply(act(g, basis_vector(i)), act(g, basis_vector(j)));
        if (lhs != rhs) return "generator " + std::to_string(g) + " is not multiplicative";
      }
  }
  return {};
}

EquivariantAlgebra coset_algebra(std::size_t n, const PermGroup& h) {
  if (h.degree() != n) throw DomainError("coset_algebra: subgroup degree differs from n");
  const auto universe = all_permutations(n);
  std::vector<int> coset(universe.size(), -1);
  std::vector<Permutation> reps;
  for (const auto& g : universe) {
    if (coset[g.rank()] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    for (const auto& x : h.elements()) coset[(g * x).rank()] = id;
    reps.push_back(g);
  }
  EquivariantAlgebra a;
  a.dim = reps.size();
  a.degree = n;
  a.group_generators = symmetric_generators(n);
  a.products.resize(a.dim);
  a.unit.assign(a.dim, Rational(1));
  for (std::size_t i = 0; i < a.dim; ++i) {
    a.set_product(i, i, SparseVector{{static_cast<std::uint32_t>(i), Rational(1)}});
    a.labels.push_back(reps[i].to_cycles() + "H");
  }
  for (const auto& s : a.group_generators) {
    std::vector<SparseVector> cols(a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
      cols[j] = SparseVector{{static_cast<std::uint32_t>(coset[(s * reps[j]).rank()]), Rational(1)}};
    a.action.push_back(std::move(cols));
  }
  return a;
}

EquivariantAlgebra direct_sum(const EquivariantAlgebra& a, const EquivariantAlgebra& b) {
  if (a.group_generators != b.group_generators) throw DomainError("direct_sum: group generators differ");
  EquivariantAlgebra s;
  s.dim = a.dim + b.dim;
  s.degree = a.degree;
  s.group_generators = a.group_generators;
  s.products.resize(s.dim);
  auto shift = [](const SparseVector& v, std::size_t by) {
    SparseVector out;
    for (const auto& [i, x] : v) out.emplace_back(static_cast<std::uint32_t>(i + by), x);
    return out;
  };
  for (std::size_t i = 0; i < a.dim; ++i)
    for (const auto& [j, v] : a.products[i]) s.set_product(i, j, v);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (const auto& [j, v] : b.products[i]) s.set_product(a.dim + i, a.dim + j, shift(v, a.dim));
  s.unit = a.unit;
  s.unit.insert(s.unit.end(), b.unit.begin(), b.unit.end());
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    std::vector<SparseVector> cols = a.action[g];
    for (const auto& c : b.action[g]) cols.push_back(shift(c, a.dim));
    s.action.push_back(std::move(cols));
  }
  for (const auto& l : a.labels) s.labels.push_back("L:" + l);
  for (const auto& l : b.labels) s.labels.push_back("R:" + l);
  return s;
}

// ---------------------------------------------------------------- idempotents

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n && p < 1000000; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

// Distinct rational roots of p.
std::vector<Rational> rational_roots(Poly p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  while (p.degree() > 0 && p.constant_term() == 0) {
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(c));
  }
  if (p.degree() <= 0) return roots;
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  Integer a0 = Integer(p.constant_term() * l), am = Integer(p.leading() * l);
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(am))
      for (int s : {1, -1}) {
        Rational r(num * s, den);
        r.canonicalize();
        if (p.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QVector axpy(const QVector& x, const Rational& a, const QVector& y) {
  QVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (y[i] != 0) out[i] += a * y[i];
  return out;
}

QVector scaled(QVector x, const Rational& a) {
  for (auto& v : x) v *= a;
  return x;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Minimal polynomial of x inside the corner algebra eA (unit e).
Poly minimal_polynomial(const EquivariantAlgebra& a, const QVector& e, const QVector& x) {
  std::vector<QVector> powers{e};
  while (true) {
    QVector next = powers.size() == 1 ? x : a.multiply(powers.back(), x);
    QMatrix m(a.dim, std::vector<Rational>(powers.size()));
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < powers.size(); ++j) m[i][j] = powers[j][i];
    if (auto c = solve_q(m, next)) {
      std::vector<Rational> coeffs(powers.size() + 1);
      for (std::size_t j = 0; j < powers.size(); ++j) coeffs[j] = -(*c)[j];
      coeffs.back() = 1;
      return Poly(std::move(coeffs));
    }
    powers.push_back(std::move(next));
    if (powers.size() > a.dim + 1) throw ConsistencyError("minimal_polynomial: no dependency found");
  }
}

QMatrix inverse_q(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    auto col = solve_q(m, e);
    if (!col) throw DomainError("inverse_q: matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

// perms[g][i] = index of generator g applied to idempotent i.
std::vector<std::vector<std::size_t>> idempotent_permutations(const EquivariantAlgebra& a,
                                                              const std::vector<QVector>& idems) {
  std::map<QVector, std::size_t> index;
  for (std::size_t i = 0; i < idems.size(); ++i) index.emplace(idems[i], i);
  std::vector<std::vector<std::size_t>> perms(a.action.size(), std::vector<std::size_t>(idems.size()));
  for (std::size_t g = 0; g < a.action.size(); ++g)
    for (std::size_t i = 0; i < idems.size(); ++i) {
      auto it = index.find(a.act(g, idems[i]));
      if (it == index.end())
        throw ConsistencyError("group generator does not permute the primitive idempotents");
      perms[g][i] = it->second;
    }
  return perms;
}

}  // namespace

std::vector<QVector> nilradical(const EquivariantAlgebra& a) {
  // Trace form Tr(L_{b_i b_j}) via tau_k = Tr(L_{b_k}).
  std::vector<Rational> tau(a.dim, Rational(0));
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t l = 0; l < a.dim; ++l)
      if (const auto* v = a.product(k, l))
        for (const auto& [idx, val] : *v)
          if (idx == l) tau[k] += val;
  QMatrix gram(a.dim, std::vector<Rational>(a.dim, Rational(0)));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (const auto* v = a.product(i, j))
        for (const auto& [idx, val] : *v) gram[i][j] += val * tau[idx];
  return nullspace_q(gram);
}

std::vector<QVector> primitive_idempotents(const EquivariantAlgebra& a) {
  if (a.dim > limits().equivariant_dim_limit)
    throw LimitError("primitive_idempotents: dimension " + std::to_string(a.dim) + " exceeds limit");
  if (a.dim == 0) return {};
  if (!nilradical(a).empty()) throw DomainError("primitive_idempotents: algebra is not reduced");
  std::vector<QVector> idems{a.unit};
  for (std::size_t b = 0; b < a.dim; ++b) {
    std::vector<QVector> next;
    const QVector basis = a.basis_vector(b);
    for (const auto& e : idems) {
      const QVector x = a.multiply(e, basis);
      const Poly mu = minimal_polynomial(a, e, x);
      if (mu.degree() <= 1) {
        next.push_back(e);
        continue;
      }
      const auto roots = rational_roots(mu);
      if (static_cast<int>(roots.size()) != mu.degree())
        throw DomainError("primitive_idempotents: algebra is not split over Q");
      for (std::size_t j = 0; j < roots.size(); ++j) {
        QVector part = e;
        for (std::size_t i = 0; i < roots.size(); ++i) {
          if (i == j) continue;
          QVector factor = scaled(axpy(x, -roots[i], e), Rational(1) / (roots[j] - roots[i]));
          part = a.multiply(part, factor);
        }
        if (!is_zero(part)) next.push_back(std::move(part));
      }
    }
    idems = std::move(next);
  }
  std::sort(idems.begin(), idems.end());
  return idems;
}

SimplicityVerdict is_simple_equivariant(const EquivariantAlgebra& a) {
  if (a.dim > limits().equivariant_dim_limit)
    throw LimitError("is_simple_equivariant: dimension " + std::to_string(a.dim) + " exceeds limit " +
                     std::to_string(limits().equivariant_dim_limit));
  SimplicityVerdict v;
  if (a.dim == 0) return v;  // the zero algebra is not simple
  auto nil = nilradical(a);
  if (!nil.empty()) {
    // The nilradical is invariant, nonzero and proper.
    v.reduced = false;
    v.witness = std::move(nil);
    return v;
  }
  const auto idems = primitive_idempotents(a);
  const std::size_t p = idems.size();
  v.primitive_count = p;

  // Orbit route: exact matching of translated idempotents.
  const auto perms = idempotent_permutations(a, idems);
  std::vector<std::size_t> orbit(p);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return orbit[x] == x ? x : orbit[x] = find(orbit[x]);
  };
  for (const auto& perm : perms)
    for (std::size_t i = 0; i < p; ++i) orbit[find(i)] = find(perm[i]);
  for (std::size_t i = 0; i < p; ++i)
    if (find(i) == i) ++v.orbit_count;
  v.orbit_route = v.orbit_count == 1;

  // Ideal route: every ideal is spanned by a subset of primitive idempotents;
  // invariance read off from coordinates of translated idempotents.
  QMatrix basis(a.dim, std::vector<Rational>(p));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < p; ++j) basis[i][j] = idems[j][i];
  const QMatrix coords = inverse_q(basis);
  std::vector<std::vector<std::uint64_t>> support(p);  // support[i] = bitmask rows per generator
  std::vector<std::vector<std::vector<std::size_t>>> reach(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t g = 0; g < a.action.size(); ++g) {
      QVector c = mat_vec(coords, a.act(g, idems[i]));
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < p; ++j)
        if (c[j] != 0) s.push_back(j);
      reach[i].push_back(std::move(s));
    }
  auto closed = [&](const std::vector<bool>& in) {
    for (std::size_t i = 0; i < p; ++i) {
      if (!in[i]) continue;
      for (const auto& s : reach[i])
        for (std::size_t j : s)
          if (!in[j]) return false;
    }
    return true;
  };
  std::vector<bool> proper_ideal;
  if (p <= 12) {
    std::size_t best = p + 1;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << p); ++mask) {
      std::vector<bool> in(p);
      std::size_t count = 0;
      for (std::size_t i = 0; i < p; ++i)
        if ((in[i] = (mask >> i) & 1)) ++count;
      if (count < best && closed(in)) {
        best = count;
        proper_ideal = in;
      }
    }
  } else {
    for (std::size_t start = 0; start < p && proper_ideal.empty(); ++start) {
      std::vector<bool> in(p, false);
      std::vector<std::size_t> stack{start};
      in[start] = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (const auto& s : reach[i])
          for (std::size_t j : s)
            if (!in[j]) {
              in[j] = true;
              ++count;
              stack.push_back(j);
            }
      }
      if (count < p) proper_ideal = in;
    }
  }
  v.ideal_route = proper_ideal.empty();
  if (v.ideal_route != v.orbit_route)
    throw ConsistencyError("is_simple_equivariant: orbit and ideal deciders disagree");
  v.simple = v.orbit_route;
  for (std::size_t i = 0; i < proper_ideal.size(); ++i)
    if (proper_ideal[i]) v.witness.push_back(idems[i]);
  return v;
}

// ---------------------------------------------------------------- isomorphisms

bool is_equivariant_isomorphism(const EquivariantAlgebra& s, const EquivariantAlgebra& t, const QMatrix& m) {
  if (s.dim != t.dim || m.size() != t.dim) return false;
  if (s.group_generators != t.group_generators) return false;
  if (rank_q(m) != s.dim) return false;
  std::vector<QVector> images(s.dim);
  for (std::size_t j = 0; j < s.dim; ++j) images[j] = mat_vec(m, s.basis_vector(j));
  if (mat_vec(m, s.unit) != t.unit) return false;
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = i; j < s.dim; ++j)
      if (mat_vec(m, s.multiply(s.basis_vector(i), s.basis_vector(j))) != t.multiply(images[i], images[j]))
        return false;
  for (std::size_t g = 0; g < s.action.size(); ++g)
    for (std::size_t j = 0; j < s.dim; ++j)
      if (mat_vec(m, s.act(g, s.basis_vector(j))) != t.act(g, images[j])) return false;
  return true;
}

std::optional<EquivariantIsomorphism> find_equivariant_isomorphism(const EquivariantAlgebra& source,
                                                                   const EquivariantAlgebra& target) {
  if (source.dim != target.dim || source.group_generators != target.group_generators) return std::nullopt;
  const std::size_t d = source.dim;
  const auto es = primitive_idempotents(source);
  const auto et = primitive_idempotents(target);
  if (es.size() != et.size()) return std::nullopt;
  const auto ps = idempotent_permutations(source, es);
  const auto pt = idempotent_permutations(target, et);
  const std::size_t p = es.size();
  const std::size_t gens = ps.size();

  // Orbit-wise matching with backtracking over the image of each orbit's base point.
  std::vector<long> map(p, -1);
  std::vector<bool> used(p, false);
  std::function<bool(std::size_t)> assign_from = [&](std::size_t start) -> bool {
    while (start < p && map[start] >= 0) ++start;
    if (start == p) return true;
    for (std::size_t q = 0; q < p; ++q) {
      if (used[q]) continue;
      std::vector<std::size_t> touched;
      bool ok = true;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{start, q}};
      while (!stack.empty() && ok) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (map[x] >= 0) {
          ok = static_cast<std::size_t>(map[x]) == y;
          continue;
        }
        if (used[y]) {
          ok = false;
          continue;
        }
        map[x] = static_cast<long>(y);
        used[y] = true;
        touched.push_back(x);
        for (std::size_t g = 0; g < gens; ++g) stack.emplace_back(ps[g][x], pt[g][y]);
      }
      if (ok && assign_from(start + 1)) return true;
      for (std::size_t x : touched) {
        used[map[x]] = false;
        map[x] = -1;
      }
    }
    return false;
  };
  if (!assign_from(0)) return std::nullopt;

  // M e_i = f_map(i): M = F_sigma E^-1.
  QMatrix e(d, std::vector<Rational>(d)), f(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      e[i][j] = es[j][i];
      f[i][j] = et[map[j]][i];
    }
  const QMatrix einv = inverse_q(e);
  EquivariantIsomorphism iso;
  iso.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      if (f[i][l] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (einv[l][j] != 0) iso.matrix[i][j] += f[i][l] * einv[l][j];
    }
  if (!is_equivariant_isomorphism(source, target, iso.matrix))
    throw ConsistencyError("find_equivariant_isomorphism: constructed map failed verification");
  return iso;
}

std::optional<EquivariantIsomorphism> match_fiber_algebra(const EquivariantAlgebra& fiber_algebra, std::size_t n,
                                                          std::size_t k, const PermGroup& h) {
  if (h.degree() != k) throw DomainError("match_fiber_algebra: subgroup degree differs from k");
  if (k > n) throw DomainError("match_fiber_algebra: k exceeds n");
  Integer expected = 1;
  for (std::size_t i = n - k + 1; i <= n; ++i) expected *= static_cast<unsigned long>(i);
  if (expected % static_cast<unsigned long>(h.order()) != 0)
    throw ConsistencyError("match_fiber_algebra: |H| does not divide n!/(n-k)!");
  expected /= static_cast<unsigned long>(h.order());
  if (expected != static_cast<unsigned long>(fiber_algebra.dim))
    throw DomainError("match_fiber_algebra: dimension " + std::to_string(fiber_algebra.dim) +
                      " differs from n!/(|H|(n-k)!) = " + expected.get_str());
  const auto target = coset_algebra(n, PermGroup::young_product(h, n));
  return find_equivariant_isomorphism(fiber_algebra, target);
}

}  // namespace repst
