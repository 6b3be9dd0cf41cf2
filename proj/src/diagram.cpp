#include "repst/diagram.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace repst {

Diagram::Diagram(std::size_t a, std::size_t b, SetPartition p)
    : dom(static_cast<std::uint16_t>(a)), cod(static_cast<std::uint16_t>(b)), partition(std::move(p)) {
  if (partition.ground_size() != a + b)
    throw DomainError("diagram ground size " + std::to_string(partition.ground_size()) + " != " +
                      std::to_string(a) + " + " + std::to_string(b));
}

Diagram Diagram::from_blocks(std::size_t a, std::size_t b, const std::vector<std::vector<std::size_t>>& blocks) {
  return Diagram(a, b, SetPartition::from_blocks(a + b, blocks));
}

Diagram Diagram::one_block(std::size_t a, std::size_t b) { return Diagram(a, b, SetPartition::one_block(a + b)); }

Diagram Diagram::permutation(std::span<const std::uint8_t> sigma) {
  const std::size_t k = sigma.size();
  std::vector<int> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = static_cast<int>(i);
    labels[k + sigma[i]] = static_cast<int>(i);
  }
  return Diagram(k, k, SetPartition::from_labels(labels));
}

namespace {

constexpr std::size_t kMaxComposePoints = 3 * 64;

}  // namespace

DiagramProduct compose_diagrams(const Diagram& rho, const Diagram& pi) {
  if (pi.cod != rho.dom)
    throw DomainError("compose: boundary mismatch (" + std::to_string(pi.cod) + " vs " +
                      std::to_string(rho.dom) + ")");
  const std::size_t a = pi.dom, b = pi.cod, c = rho.cod;
  const std::size_t total = a + b + c;
  if (total > kMaxComposePoints) throw LimitError("compose: too many boundary points");

  // Points: [0, a) domain of pi, [a, a+b) middle, [a+b, a+b+c) codomain of rho.
  // Union-find whose roots carry a flag "class touches the outer boundary".
  std::array<std::uint8_t, kMaxComposePoints> parent;
  std::array<bool, kMaxComposePoints> outer;
  for (std::size_t i = 0; i < total; ++i) {
    parent[i] = static_cast<std::uint8_t>(i);
    outer[i] = i < a || i >= a + b;
  }
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint8_t x, std::uint8_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x < y) std::swap(x, y);
    parent[x] = y;
    outer[y] = outer[y] || outer[x];
  };

  std::array<std::int16_t, 64> first;
  first.fill(-1);
  const auto pl = pi.partition.labels();
  for (std::size_t i = 0; i < a + b; ++i) {
    auto& f = first[pl[i]];
    if (f < 0) f = static_cast<std::int16_t>(i);
    else unite(static_cast<std::uint8_t>(f), static_cast<std::uint8_t>(i));
  }
  first.fill(-1);
  const auto rl = rho.partition.labels();
  for (std::size_t i = 0; i < b + c; ++i) {
    const auto pt = static_cast<std::uint8_t>(a + i);
    auto& f = first[rl[i]];
    if (f < 0) f = static_cast<std::int16_t>(pt);
    else unite(static_cast<std::uint8_t>(f), pt);
  }

  DiagramProduct out;
  for (std::size_t i = a; i < a + b; ++i)
    if (find(static_cast<std::uint8_t>(i)) == i && !outer[i]) ++out.closed_blocks;

  std::array<std::int16_t, kMaxComposePoints> relabel;
  relabel.fill(-1);
  std::vector<SetPartition::Label> labels(a + c);
  SetPartition::Label next = 0;
  auto emit = [&](std::size_t point, std::size_t slot) {
    auto r = find(static_cast<std::uint8_t>(point));
    if (relabel[r] < 0) relabel[r] = next++;
    labels[slot] = static_cast<SetPartition::Label>(relabel[r]);
  };
  for (std::size_t i = 0; i < a; ++i) emit(i, i);
  for (std::size_t i = 0; i < c; ++i) emit(a + b + i, a + i);
  out.diagram.dom = static_cast<std::uint16_t>(a);
  out.diagram.cod = static_cast<std::uint16_t>(c);
  out.diagram.partition = PartitionBuilder::adopt(std::move(labels), next);
  return out;
}

Diagram tensor_diagrams(const Diagram& f, const Diagram& g) {
  const std::size_t a = f.dom, b = f.cod, a2 = g.dom, b2 = g.cod;
  std::vector<int> labels(a + a2 + b + b2);
  const auto fl = f.partition.labels();
  const auto gl = g.partition.labels();
  const int shift = static_cast<int>(f.partition.num_blocks());
  for (std::size_t i = 0; i < a; ++i) labels[i] = fl[i];
  for (std::size_t i = 0; i < a2; ++i) labels[a + i] = shift + gl[i];
  for (std::size_t j = 0; j < b; ++j) labels[a + a2 + j] = fl[a + j];
  for (std::size_t j = 0; j < b2; ++j) labels[a + a2 + b + j] = shift + gl[a2 + j];
  return Diagram(a + a2, b + b2, SetPartition::from_labels(labels));
}

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(const Diagram& d, Scalar coeff) : dom_(d.dom), cod_(d.cod) {
  if (!coeff.is_zero()) terms_.emplace(d, std::move(coeff));
}

Scalar Morphism::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Morphism::add_term(const Diagram& d, const Scalar& c) {
  if (d.dom != dom_ || d.cod != cod_) throw DomainError("add_term: diagram boundary does not match morphism");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::pair<Diagram, Scalar>> Morphism::sorted_terms() const {
  std::vector<std::pair<Diagram, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.dom_ != dom_ || o.cod_ != cod_) throw DomainError("morphism sum: boundary mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  if (o.dom_ != dom_ || o.cod_ != cod_) throw DomainError("morphism difference: boundary mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Morphism& Morphism::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

Morphism identity(std::size_t a) {
  std::vector<int> labels(2 * a);
  for (std::size_t i = 0; i < a; ++i) labels[i] = labels[a + i] = static_cast<int>(i);
  return Morphism(Diagram(a, a, SetPartition::from_labels(labels)));
}

Morphism compose(const Morphism& rho, const Morphism& pi, ComposeStats* stats) {
  if (pi.cod() != rho.dom())
    throw DomainError("compose: boundary mismatch (pi.cod = " + std::to_string(pi.cod()) +
                      ", rho.dom = " + std::to_string(rho.dom()) + ")");
  Morphism out(pi.dom(), rho.cod());
  for (const auto& [dr, cr] : rho.terms()) {
    for (const auto& [dp, cp] : pi.terms()) {
      DiagramProduct prod = compose_diagrams(dr, dp);
      Scalar c = cr * cp;
      c.mul_t_power(prod.closed_blocks);
      if (stats) {
        ++stats->products;
        stats->max_closed_blocks = std::max(stats->max_closed_blocks, prod.closed_blocks);
      }
      out.add_term(prod.diagram, c);
    }
  }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism out(f.dom() + g.dom(), f.cod() + g.cod());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add_term(tensor_diagrams(df, dg), cf * cg);
  return out;
}

Morphism symmetry(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  std::vector<int> labels(2 * n);
  for (std::size_t i = 0; i < a; ++i) labels[i] = labels[n + b + i] = static_cast<int>(i);
  for (std::size_t j = 0; j < b; ++j) labels[a + j] = labels[n + j] = static_cast<int>(a + j);
  return Morphism(Diagram(n, n, SetPartition::from_labels(labels)));
}

Morphism cup_cap(std::size_t k, CupCap direction) {
  std::vector<int> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = labels[2 * k - 1 - i] = static_cast<int>(i);
  auto p = SetPartition::from_labels(labels);
  return direction == CupCap::Cup ? Morphism(Diagram(0, 2 * k, p)) : Morphism(Diagram(2 * k, 0, p));
}

Scalar closure_trace(const Morphism& f) {
  if (f.dom() != f.cod()) throw DomainError("closure_trace: morphism is not an endomorphism");
  const std::size_t k = f.dom();
  std::vector<int> pairing(2 * k);
  for (std::size_t i = 0; i < k; ++i) pairing[i] = pairing[k + i] = static_cast<int>(i);
  const SetPartition closing = SetPartition::from_labels(pairing);
  Scalar total;
  for (const auto& [d, c] : f.terms()) {
    Scalar term = c;
    term.mul_t_power(join(d.partition, closing).num_blocks());
    total += term;
  }
  return total;
}

FrobeniusGenerators frobenius_generators() {
  return {Morphism(Diagram::one_block(2, 1)), Morphism(Diagram::one_block(0, 1)),
          Morphism(Diagram::one_block(1, 2)), Morphism(Diagram::one_block(1, 0))};
}

Morphism specialize_coefficients(const Morphism& f, const Rational& x) {
  Morphism out(f.dom(), f.cod());
  for (const auto& [d, c] : f.terms()) out.add_term(d, Scalar(c.evaluate(x)));
  return out;
}

Morphism compose_chain(std::initializer_list<std::reference_wrapper<const Morphism>> chain) {
  if (chain.size() == 0) throw DomainError("compose_chain: empty chain");
  auto it = std::rbegin(chain);
  Morphism acc = it->get();
  for (++it; it != std::rend(chain); ++it) acc = compose(it->get(), acc);
  return acc;
}

}  // namespace repst
