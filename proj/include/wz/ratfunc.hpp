#pragma once

#include <string>

#include "wz/bpoly.hpp"

namespace wz {

/// Reduced quotient of polynomials in n and k. The denominator has
/// coprime integer coefficients and a positive leading coefficient;
/// zero is 0 / 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const BPoly& p) : num_(p), den_(1) {}       // NOLINT(google-explicit-constructor)
  RationalFunction(const BPoly& num, const BPoly& den);

  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool free_of_n() const { return num_.free_of_n() && den_.free_of_n(); }

  /// Value at (n, k); throws PoleError when the reduced denominator vanishes.
  Rational operator()(const Rational& n, const Rational& k) const;
  /// Value at (n, k) taken as the limit along n with k fixed, which
  /// resolves points where numerator and denominator both vanish.
  Rational limit_along_n(const Rational& n, const Rational& k) const;

  RationalFunction shift_k(const Rational& c) const;
  RationalFunction shift_n(const Rational& c) const;
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num) / (den)"
  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(BPoly num, BPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_sign();

  BPoly num_;
  BPoly den_;
};

/// Reduces num / den; throws on a zero denominator.
RationalFunction rf_simplify(const BPoly& num, const BPoly& den);

/// Univariate rational function in one variable, kept reduced with a
/// monic denominator.
struct URatFunc {
  UPoly num;
  UPoly den{1};

  static URatFunc make(const UPoly& num, const UPoly& den);
  Rational operator()(const Rational& x) const;
  bool is_zero() const { return num.is_zero(); }
};

}  // namespace wz
