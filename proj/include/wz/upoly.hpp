#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wz/rational.hpp"

namespace wz {

/// Dense univariate polynomial over the rationals, coefficients stored
/// from the constant term upward. The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c0 + c1 x
  static UPoly linear(const Rational& c0, const Rational& c1);
  static UPoly x() { return linear(0, 1); }
  static UPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const;
  const Rational& lc() const;

  Rational operator()(const Rational& x) const;
  /// p(x + c)
  UPoly shifted(const Rational& c) const;
  /// p(s x)
  UPoly scaled_arg(const Rational& s) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend UPoly operator*(long s, UPoly a) { return a *= Rational(s); }
  friend UPoly operator*(UPoly a, long s) { return a *= Rational(s); }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Expanded form, highest degree first, e.g. "172*n^2 + 269*n + 106".
  std::string to_string(char var = 'n') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division over Q.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// Rational c, carrying the sign of the leading coefficient, such that
/// p / c has coprime integer coefficients and positive leading
/// coefficient. content(0) = 1.
Rational content(const UPoly& p);
UPoly primitive(const UPoly& p);
UPoly pow(const UPoly& p, int e);

}  // namespace wz
