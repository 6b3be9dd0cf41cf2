#include "repst/scalar.hpp"

#include <cctype>
#include <sstream>

namespace repst {

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::t() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, std::size_t d) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(d + 1, Rational(0));
  p.c_[d] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::shifted(std::size_t d) const {
  if (is_zero() || d == 0) return *this;
  Poly r;
  r.c_.assign(d, Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly{}, rem};
  Poly quo;
  quo.c_.assign(rem.c_.size() - d.c_.size() + 1, Rational(0));
  const Rational lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::size_t shift = rem.c_.size() - d.c_.size();
    Rational q = rem.leading() / lead;
    quo.c_[shift] = q;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= q * d.c_[i];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw ConsistencyError("exact polynomial division left a remainder");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Rational(1) / leading();
  return r;
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

std::string rational_to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.leading();
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar::Kind Scalar::kind() const {
  if (!den_.is_one()) return Kind::RatFun;
  return num_.is_constant() ? Kind::Rational : Kind::Poly;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero scalar");
  Poly n = num_ * o.den_;
  Poly d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

Scalar& Scalar::mul_t_power(std::size_t d) {
  if (d == 0 || is_zero()) return *this;
  num_ = num_.shifted(d);
  if (!den_.is_one()) normalize();
  return *this;
}

Rational Scalar::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw ArithmeticError("pole at t = " + rational_to_string(x));
  Rational r = num_.evaluate(x) / d;
  return r;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Recursive-descent parser for rational expressions in t: + - * / ^ and parens.
class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse scalar '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (eat('*')) v *= factor();
      else if (eat('/')) v /= factor();
      else return v;
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      Scalar r(1);
      for (unsigned long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }
  Scalar atom() {
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      return Scalar::t();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, 't' or '('");
    return Scalar(Rational(Integer(s_.substr(start, pos_ - start))));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).parse(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points, std::size_t degree_bound) {
  if (points.size() < degree_bound + 1)
    throw DomainError("interpolate: need at least degree_bound + 1 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first) throw DomainError("interpolate: repeated abscissa");

  // Newton divided differences on the first degree_bound + 1 points.
  const std::size_t m = degree_bound + 1;
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  Poly result;
  Poly basis(1);
  for (std::size_t i = 0; i < m; ++i) {
    result += basis * dd[i];
    basis = basis * Poly(std::vector<Rational>{-points[i].first, Rational(1)});
  }
  for (std::size_t i = m; i < points.size(); ++i)
    if (result.evaluate(points[i].first) != points[i].second)
      throw ConsistencyError("interpolate: point " + std::to_string(i) +
                             " is inconsistent with the degree bound " + std::to_string(degree_bound));
  return result;
}

}  // namespace repst
