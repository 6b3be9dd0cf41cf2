#include "repst/fiber.hpp"

#include <algorithm>
#include <string>

namespace repst {

FiberMatrix::FiberMatrix(std::size_t n_, std::size_t a, std::size_t b)
    : n(n_), dom_power(a), cod_power(b), rows(fiber_size(n_, b)), cols(fiber_size(n_, a)) {}

Rational FiberMatrix::at(std::uint64_t r, std::uint64_t c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

void FiberMatrix::add(std::uint64_t r, std::uint64_t c, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = entries.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

Rational FiberMatrix::trace() const {
  Rational s = 0;
  for (const auto& [rc, v] : entries)
    if (rc.first == rc.second) s += v;
  return s;
}

std::uint64_t fiber_size(std::size_t n, std::size_t p) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < p; ++i) {
    s *= n;
    if (s > limits().fiber_entry_budget)
      throw LimitError("fiber: " + std::to_string(n) + "^" + std::to_string(p) + " exceeds the entry budget");
  }
  return s;
}

FiberMatrix fiber_diagram(const Diagram& d, std::size_t n) {
  const std::size_t a = d.dom, b = d.cod;
  FiberMatrix m(n, a, b);
  fiber_size(n, a + b);
  const std::size_t blocks = d.partition.num_blocks();
  if (blocks > 0 && n == 0) return m;
  const auto labels = d.partition.labels();
  std::vector<std::size_t> value(blocks, 0);
  while (true) {
    std::uint64_t col = 0, row = 0;
    for (std::size_t i = 0; i < a; ++i) col = col * n + value[labels[i]];
    for (std::size_t j = 0; j < b; ++j) row = row * n + value[labels[a + j]];
    m.entries.emplace(std::make_pair(row, col), Rational(1));
    std::size_t pos = blocks;
    while (pos > 0 && ++value[pos - 1] == n) value[--pos] = 0;
    if (pos == 0) break;
  }
  return m;
}

FiberMatrix fiber_morphism(const Morphism& f, std::size_t n) {
  FiberMatrix out(n, f.dom(), f.cod());
  const Rational x(static_cast<unsigned long>(n));
  for (const auto& [d, c] : f.sorted_terms()) {
    const Rational v = c.evaluate(x);
    if (v == 0) continue;
    for (const auto& [rc, e] : fiber_diagram(d, n).entries) out.add(rc.first, rc.second, v * e);
  }
  return out;
}

FiberMatrix operator*(const FiberMatrix& x, const FiberMatrix& y) {
  if (x.cols != y.rows || x.n != y.n) throw DomainError("fiber product: inner dimensions differ");
  FiberMatrix out;
  out.n = x.n;
  out.dom_power = y.dom_power;
  out.cod_power = x.cod_power;
  out.rows = x.rows;
  out.cols = y.cols;
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Rational>>> by_row;
  for (const auto& [rc, v] : y.entries) by_row[rc.first].emplace_back(rc.second, v);
  for (const auto& [rc, v] : x.entries) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c, w] : it->second) out.add(rc.first, c, v * w);
  }
  return out;
}

FiberMatrix kron(const FiberMatrix& x, const FiberMatrix& y) {
  if (x.n != y.n) throw DomainError("kron: different n");
  FiberMatrix out(x.n, x.dom_power + y.dom_power, x.cod_power + y.cod_power);
  for (const auto& [rx, vx] : x.entries)
    for (const auto& [ry, vy] : y.entries)
      out.entries.emplace(std::make_pair(rx.first * y.rows + ry.first, rx.second * y.cols + ry.second), vx * vy);
  return out;
}

namespace {

std::uint64_t permute_index(const Permutation& sigma, std::uint64_t index, std::size_t a) {
  const std::size_t n = sigma.degree();
  std::uint64_t out = 0, scale = 1;
  for (std::size_t leg = 0; leg < a; ++leg) {
    out += sigma[index % n] * scale;
    index /= n;
    scale *= n;
  }
  return out;
}

}  // namespace

FiberMatrix leg_action(const Permutation& sigma, std::size_t a) {
  const std::size_t n = sigma.degree();
  FiberMatrix m(n, a, a);
  for (std::uint64_t i = 0; i < m.cols; ++i) m.entries.emplace(std::make_pair(permute_index(sigma, i, a), i), Rational(1));
  return m;
}

FrobeniusAlgebra pointwise_algebra(std::size_t n) {
  FrobeniusAlgebra t;
  auto& a = t.algebra;
  a.dim = n;
  a.degree = n;
  a.group_generators = symmetric_generators(n);
  a.products.resize(n);
  a.unit.assign(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    a.set_product(i, i, SparseVector{{static_cast<std::uint32_t>(i), Rational(1)}});
    a.labels.push_back("e" + std::to_string(i));
  }
  for (const auto& s : a.group_generators) {
    std::vector<SparseVector> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = SparseVector{{s[j], Rational(1)}};
    a.action.push_back(std::move(cols));
  }
  t.counit.assign(n, Rational(1));
  return t;
}

FiberMatrix frobenius_functor(const FrobeniusAlgebra& t, const Diagram& d) {
  const auto& alg = t.algebra;
  const std::size_t dim = alg.dim;
  auto eps = [&](const QVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < dim; ++i) s += v[i] * t.counit[i];
    return s;
  };
  QMatrix gram(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) gram[i][j] = eps(alg.multiply(alg.basis_vector(i), alg.basis_vector(j)));
  std::vector<QVector> dual(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto col = solve_q(gram, alg.basis_vector(j));
    if (!col) throw DomainError("frobenius_functor: trace form is degenerate");
    dual[j] = std::move(*col);
  }
  const std::size_t a = d.dom, b = d.cod;
  FiberMatrix m(dim, a, b);
  fiber_size(dim, a + b);
  const auto blocks = d.partition.blocks();
  std::map<std::vector<std::uint32_t>, Rational> memo;
  std::vector<std::size_t> idx(a + b, 0);
  auto block_value = [&](std::size_t bi) {
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(bi)};
    for (std::size_t p : blocks[bi]) key.push_back(static_cast<std::uint32_t>(idx[p]));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    QVector v = alg.unit;
    for (std::size_t p : blocks[bi]) v = alg.multiply(v, p < a ? alg.basis_vector(idx[p]) : dual[idx[p]]);
    return memo.emplace(std::move(key), eps(v)).first->second;
  };
  if (dim == 0 && a + b > 0) return m;
  while (true) {
    Rational value = 1;
    for (std::size_t bi = 0; bi < blocks.size() && value != 0; ++bi) value *= block_value(bi);
    if (value != 0) {
      std::uint64_t col = 0, row = 0;
      for (std::size_t i = 0; i < a; ++i) col = col * dim + idx[i];
      for (std::size_t j = 0; j < b; ++j) row = row * dim + idx[a + j];
      m.entries.emplace(std::make_pair(row, col), value);
    }
    std::size_t pos = a + b;
    while (pos > 0 && ++idx[pos - 1] == dim) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return m;
}

// ---------------------------------------------------------------- specialization

namespace {

using Sparse = std::map<std::uint64_t, Rational>;

// Incremental echelon basis of sparse vectors. reduced[i] has pivot equal to
// its least index and equals sum_j combo[i][j] * original[j].
class SparseBasis {
 public:
  std::size_t size() const { return reduced_.size(); }

  // Adds v if independent; returns whether it was added.
  bool add(const Sparse& v) {
    Sparse x = v;
    std::vector<Rational> combo(reduced_.size() + 1, Rational(0));
    combo.back() = 1;
    reduce(x, [&](std::size_t i, const Rational& c) {
      for (std::size_t j = 0; j < combo_[i].size(); ++j) combo[j] -= c * combo_[i][j];
    });
    if (x.empty()) return false;
    pivot_index_[x.begin()->first] = reduced_.size();
    reduced_.push_back(std::move(x));
    combo_.push_back(std::move(combo));
    for (auto& c : combo_) c.resize(reduced_.size(), Rational(0));
    return true;
  }

  // Coordinates of v in the original vectors; ConsistencyError if outside the span.
  QVector coordinates(const Sparse& v) const {
    Sparse x = v;
    QVector out(reduced_.size(), Rational(0));
    reduce(x, [&](std::size_t i, const Rational& c) {
      for (std::size_t j = 0; j < combo_[i].size(); ++j)
        if (combo_[i][j] != 0) out[j] += c * combo_[i][j];
    });
    if (!x.empty()) throw ConsistencyError("specialize_algebra: vector leaves the carrier image");
    return out;
  }

 private:
  template <class F>
  void reduce(Sparse& x, F&& record) const {
    auto it = x.begin();
    while (it != x.end()) {
      auto p = pivot_index_.find(it->first);
      if (p == pivot_index_.end()) {
        ++it;
        continue;
      }
      const Sparse& r = reduced_[p->second];
      const Rational c = it->second / r.begin()->second;
      record(p->second, c);
      const std::uint64_t key = it->first;
      for (const auto& [k, val] : r) {
        auto [e, inserted] = x.try_emplace(k, -c * val);
        if (!inserted) {
          e->second -= c * val;
          if (e->second == 0) x.erase(e);
        }
      }
      it = x.upper_bound(key);
    }
  }

  std::vector<Sparse> reduced_;
  std::vector<std::vector<Rational>> combo_;
  std::map<std::uint64_t, std::size_t> pivot_index_;
};

SparseVector to_sparse_vector(const QVector& v) { return to_sparse(v); }

std::string multi_index(std::uint64_t index, std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> legs(k);
  for (std::size_t leg = k; leg-- > 0;) {
    legs[leg] = index % n;
    index /= n;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(legs[i]);
  return s + ")";
}

}  // namespace

EquivariantAlgebra specialize_algebra(const AlgebraObject& a, std::size_t n) {
  const std::size_t k = a.k();
  if (n < k) throw DomainError("specialize_algebra: n < k");
  const FiberMatrix f = fiber_morphism(a.idem(), n);
  std::map<std::uint64_t, Sparse> columns;
  for (const auto& [rc, v] : f.entries) columns[rc.second][rc.first] = v;

  SparseBasis basis;
  std::vector<Sparse> vectors;
  std::vector<std::uint64_t> pivot_cols;
  for (const auto& [c, v] : columns)
    if (basis.add(v)) {
      vectors.push_back(v);
      pivot_cols.push_back(c);
    }
  if (vectors.empty()) throw DomainError("zero carrier: the fiber of the idempotent vanishes at n = " + std::to_string(n));

  EquivariantAlgebra out;
  out.dim = vectors.size();
  out.degree = n;
  out.group_generators = symmetric_generators(n);
  out.products.resize(out.dim);
  for (auto c : pivot_cols) out.labels.push_back(multi_index(c, n, k));

  const FiberMatrix m = fiber_morphism(a.mult, n);
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Rational>>> m_cols;
  for (const auto& [rc, v] : m.entries) m_cols[rc.second].emplace_back(rc.first, v);
  const std::uint64_t nk = f.rows;
  for (std::size_t i = 0; i < out.dim; ++i)
    for (std::size_t j = i; j < out.dim; ++j) {
      Sparse prod;
      for (const auto& [p, x] : vectors[i])
        for (const auto& [q, y] : vectors[j]) {
          auto it = m_cols.find(p * nk + q);
          if (it == m_cols.end()) continue;
          for (const auto& [r, w] : it->second) prod[r] += x * y * w;
        }
      std::erase_if(prod, [](const auto& e) { return e.second == 0; });
      SparseVector c = to_sparse_vector(basis.coordinates(prod));
      out.set_product(i, j, c);
      if (i != j) out.set_product(j, i, std::move(c));
    }

  const FiberMatrix u = fiber_morphism(a.unit, n);
  Sparse unit;
  for (const auto& [rc, v] : u.entries) unit[rc.first] = v;
  out.unit = basis.coordinates(unit);

  for (const auto& g : out.group_generators) {
    std::vector<SparseVector> cols(out.dim);
    for (std::size_t j = 0; j < out.dim; ++j) {
      Sparse moved;
      for (const auto& [idx, v] : vectors[j]) moved[permute_index(g, idx, k)] = v;
      cols[j] = to_sparse_vector(basis.coordinates(moved));
    }
    out.action.push_back(std::move(cols));
  }
  return out;
}

}  // namespace repst
