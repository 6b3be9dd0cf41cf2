#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repst/config.hpp"

namespace repst {

using Rational = mpq_class;
using Integer = mpz_class;

/// Univariate polynomial in t over Q, coefficients in ascending degree with
/// no trailing zeros. The zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants promote implicitly
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t();
  /// c * t^d
  static Poly monomial(const Rational& c, std::size_t d);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational constant_term() const { return coeff(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  /// Multiplies by t^d.
  Poly shifted(std::size_t d) const;

  /// Euclidean division; throws ArithmeticError on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Division that must be exact; throws ConsistencyError otherwise.
  Poly exact_div(const Poly& d) const;
  Poly monic() const;

  Rational evaluate(const Rational& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both arguments are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(t), always stored as num/den with den monic and
/// gcd(num, den) = 1. Rationals and polynomials are the special cases
/// den == 1 (and deg num <= 0), so equality is structural.
class Scalar {
 public:
  enum class Kind { Rational, Poly, RatFun };

  Scalar() = default;
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar t() { return Scalar(Poly::t()); }
  /// Parses "3", "-1/2", or a polynomial like "t^2 - t" / "(t^2-t)/2".
  static Scalar parse(const std::string& text);

  Kind kind() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  bool is_poly() const { return den_.is_one(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// Constant value; precondition is_rational().
  Rational rational() const { return num_.constant_term(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplies by t^d in place.
  Scalar& mul_t_power(std::size_t d);

  /// Substitutes t := x. Throws ArithmeticError at a pole.
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_{1};
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Unique polynomial of degree <= degree_bound through the points. Extra
/// points must be consistent with it, otherwise ConsistencyError.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points, std::size_t degree_bound);

std::string rational_to_string(const Rational& q);

}  // namespace repst
