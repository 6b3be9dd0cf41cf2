#include "repst/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace repst {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  auto p = identity(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::string& text) {
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("cycle notation: expected '(' in '" + text + "'");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip();
      if (pos >= text.size()) throw DomainError("cycle notation: unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw DomainError("cycle notation: unexpected character in '" + text + "'");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = 10 * v + (text[pos++] - '0');
      if (v >= n) throw DomainError("cycle notation: point " + std::to_string(v) + " out of range for degree " + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw DomainError("cycle notation: repeated point in a cycle");
      cycle.push_back(v);
    }
    auto c = identity(n);
    for (std::size_t i = 0; i < cycle.size(); ++i) c.img_[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    // Cycles written left to right act right to left.
    result = result * c;
    skip();
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  int s = 1;
  for (auto len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << j;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = img_.size();
  std::uint64_t r = 0;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t v = 0; v < img_[i]; ++v)
      if (!used[v]) ++smaller;
    used[img_[i]] = true;
    r = r * (n - i) + smaller;
  }
  return r;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("permutation product: degrees differ");
  Permutation r;
  r.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

std::vector<Permutation> parse_generators(std::size_t n, const std::string& text) {
  std::vector<Permutation> out;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    bool blank = std::all_of(current.begin(), current.end(), [](unsigned char c) { return std::isspace(c); });
    if (!blank) {
      auto p = Permutation::from_cycles(n, current);
      if (!p.is_identity()) out.push_back(p);
    }
    current.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) flush();
    else current += ch;
  }
  flush();
  return out;
}

std::string format_generators(std::span<const Permutation> gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ",";
    out += g.to_cycles();
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  std::unordered_set<std::uint64_t> seen;
  std::deque<Permutation> queue;
  auto e = Permutation::identity(degree);
  seen.insert(e.rank());
  elements_.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens_) {
      Permutation y = g * x;
      if (seen.insert(y.rank()).second) {
        elements_.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(elements_.begin(), elements_.end());
  for (const auto& x : elements_) ++type_counts_[x.cycle_type()];
}

PermGroup PermGroup::symmetric(std::size_t n) { return PermGroup(n, symmetric_generators(n)); }

PermGroup PermGroup::alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, "(0 1 " + std::to_string(i) + ")"));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::symmetric_on_tail(std::size_t n, std::size_t first) {
  std::vector<Permutation> gens;
  for (std::size_t i = first; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::young_product(const PermGroup& h, std::size_t n) {
  const std::size_t k = h.degree();
  if (k > n) throw DomainError("young_product: factor degree exceeds n");
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < k; ++i) img[i] = g[i];
    gens.emplace_back(std::move(img));
  }
  for (std::size_t i = k; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return PermGroup(n, std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (g.degree() != degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& x) { return g.contains(x); });
}

PermGroup PermGroup::conjugate(const Permutation& c) const {
  const Permutation ci = c.inverse();
  std::vector<Permutation> gens;
  for (const auto& g : gens_) gens.push_back(c * g * ci);
  return PermGroup(degree_, std::move(gens));
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  std::vector<Permutation> gens;
  if (n < 2) return gens;
  gens.push_back(Permutation::transposition(n, 0, 1));
  if (n > 2) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % n);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::optional<Permutation> find_conjugator(const PermGroup& g, const PermGroup& k) {
  if (g.degree() != k.degree() || g.order() != k.order() || g.cycle_type_counts() != k.cycle_type_counts())
    return std::nullopt;
  for (const auto& c : all_permutations(g.degree())) {
    const Permutation ci = c.inverse();
    bool ok = std::all_of(g.generators().begin(), g.generators().end(),
                          [&](const Permutation& x) { return k.contains(c * x * ci); });
    if (ok) return c;
  }
  return std::nullopt;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Cyclic extension: calls extend(G, g) once per right coset G g outside G.
template <class Fn>
void for_each_extension(const PermGroup& g, const std::vector<Permutation>& universe, Fn&& extend) {
  std::vector<char> seen(universe.size(), 0);
  for (const auto& x : g.elements()) seen[x.rank()] = 1;
  for (const auto& x : universe) {
    if (seen[x.rank()]) continue;
    for (const auto& h : g.elements()) seen[(h * x).rank()] = 1;
    auto gens = g.generators();
    gens.push_back(x);
    extend(PermGroup(g.degree(), std::move(gens)));
  }
}

}  // namespace

std::vector<PermGroup> subgroups_up_to_conjugacy(std::size_t n) {
  if (n > limits().subgroup_degree_limit)
    throw LimitError("subgroups_up_to_conjugacy: degree " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limits().subgroup_degree_limit));
  const auto universe = all_permutations(n);
  std::vector<PermGroup> reps{PermGroup::trivial(n)};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const PermGroup g = reps[i];
    for_each_extension(g, universe, [&](PermGroup k) {
      for (const auto& r : reps)
        if (find_conjugator(r, k)) return;
      reps.push_back(std::move(k));
    });
  }
  std::sort(reps.begin(), reps.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return reps;
}

std::vector<PermGroup> subgroups_containing(const PermGroup& base) {
  const std::size_t n = base.degree();
  if (n > limits().lemma_degree_limit)
    throw LimitError("subgroups_containing: degree " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limits().lemma_degree_limit));
  const auto universe = all_permutations(n);
  std::vector<PermGroup> found{base};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const PermGroup g = found[i];
    for_each_extension(g, universe, [&](PermGroup k) {
      for (const auto& f : found)
        if (f == k) return;
      found.push_back(std::move(k));
    });
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

ContainsTimesReport verify_contains_times(std::size_t n, std::size_t k) {
  if (n <= 2 * k + 1)
    throw DomainError("verify_contains_times: requires n > 2k + 1 (n = " + std::to_string(n) +
                      ", k = " + std::to_string(k) + ")");
  if (n > limits().lemma_degree_limit)
    throw LimitError("verify_contains_times: degree " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limits().lemma_degree_limit));
  ContainsTimesReport report;
  report.n = n;
  report.k = k;
  report.pass = true;
  const auto universe = all_permutations(n);
  for (const auto& h : subgroups_containing(PermGroup::symmetric_on_tail(n, k))) {
    ContainsTimesCase cs;
    cs.group = h;
    for (std::size_t kp = 0; kp <= k && !cs.found; ++kp) {
      // c H c^-1 = H' x S_{n-k'} iff it preserves {0..k'-1} and contains
      // every adjacent transposition of the tail.
      std::vector<Permutation> tail;
      for (std::size_t i = kp; i + 1 < n; ++i) tail.push_back(Permutation::transposition(n, i, i + 1));
      for (const auto& c : universe) {
        const Permutation ci = c.inverse();
        bool ok = std::all_of(tail.begin(), tail.end(), [&](const Permutation& t) { return h.contains(ci * t * c); });
        if (!ok) continue;
        std::vector<Permutation> conj_gens;
        for (const auto& g : h.generators()) conj_gens.push_back(c * g * ci);
        ok = std::all_of(conj_gens.begin(), conj_gens.end(), [&](const Permutation& g) {
          for (std::size_t i = 0; i < kp; ++i)
            if (g[i] >= kp) return false;
          return true;
        });
        if (!ok) continue;
        std::vector<Permutation> factor_gens;
        for (const auto& g : conj_gens) {
          std::vector<std::uint8_t> img(g.images().begin(), g.images().begin() + kp);
          factor_gens.emplace_back(std::move(img));
        }
        cs.k_prime = kp;
        cs.factor = PermGroup(kp, std::move(factor_gens));
        cs.conjugator = c;
        cs.found = true;
        break;
      }
    }
    if (!cs.found) report.pass = false;
    report.cases.push_back(std::move(cs));
  }
  return report;
}

std::size_t sign_multiplicity(std::size_t n, const PermGroup& h) {
  if (h.degree() != n) throw DomainError("sign_multiplicity: subgroup degree differs from n");
  if (n > limits().sign_degree_limit)
    throw LimitError("sign_multiplicity: degree " + std::to_string(n) + " exceeds limit");
  // <chi, sgn> = 1/n! sum_g sgn(g) fix(g), where for g of cycle type c the
  // number of cosets xH fixed by g is |C(g)| |c^G n H| / |H|.
  const std::uint64_t group_order = factorial(n);
  Integer total = 0;
  for (const auto& [type, count_in_h] : h.cycle_type_counts()) {
    // centralizer order z_c = prod_i i^{m_i} m_i!
    std::map<std::size_t, std::size_t> mult;
    for (auto len : type) ++mult[len];
    Integer z = 1;
    for (const auto& [len, m] : mult) {
      for (std::size_t j = 0; j < m; ++j) z *= static_cast<unsigned long>(len);
      z *= static_cast<unsigned long>(factorial(m));
    }
    const Integer class_size = Integer(static_cast<unsigned long>(group_order)) / z;
    Integer fixed = z * static_cast<unsigned long>(count_in_h);
    if (fixed % static_cast<unsigned long>(h.order()) != 0)
      throw ConsistencyError("sign_multiplicity: non-integral fixed coset count");
    fixed /= static_cast<unsigned long>(h.order());
    std::size_t even_cycles = std::count_if(type.begin(), type.end(), [](std::size_t l) { return l % 2 == 0; });
    const int sgn = even_cycles % 2 == 0 ? 1 : -1;
    total += sgn * class_size * fixed;
  }
  if (total % static_cast<unsigned long>(group_order) != 0 || total < 0)
    throw ConsistencyError("sign_multiplicity: character inner product is not a natural number");
  return static_cast<std::size_t>(Integer(total / static_cast<unsigned long>(group_order)).get_ui());
}

}  // namespace repst
