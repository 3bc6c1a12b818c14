#pragma once

#include <string>

#include "wz/rational.hpp"

namespace wz {

/// Fixed-point decimal number: scaled() / 10^places(). Every operation
/// that can lose digits rounds once to nearest at the operand precision.
class Real {
 public:
  Real() = default;
  Real(Integer scaled, int places) : v_(std::move(scaled)), places_(places) {}

  static Real from_rational(const Rational& q, int places);
  static Real zero(int places) { return Real(Integer(0), places); }

  const Integer& scaled() const { return v_; }
  int places() const { return places_; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  /// One unit in the last place, 10^-places, as a rational.
  Rational ulp() const;
  Rational to_rational() const;
  double to_double() const;

  /// Same value at a different number of places (rounded when reducing).
  Real with_places(int places) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(const Rational& q);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, const Rational& q) { return a *= q; }
  friend Real operator*(const Rational& q, Real a) { return a *= q; }
  friend Real operator-(Real a) {
    a.v_ = -a.v_;
    return a;
  }
  friend bool operator<(const Real& a, const Real& b);

  /// Scientific notation of the value rounded to `digits` decimal places:
  /// "1.202056903159594285399738161511e0 (30 digits)".
  std::string to_string(int digits) const;
  /// Plain positional decimal rounded to `digits` places, e.g. "0.140625".
  std::string to_fixed(int digits) const;

 private:
  void require_same(const Real& o) const;
  Integer v_;
  int places_ = 0;
};

Real abs(Real x);
Real sqrt(const Real& x);
/// Nearest integer to q (ties away from zero).
Integer round_nearest(const Rational& q);
/// Number of correct decimal places implied by |a - b|: the largest d with
/// |a - b| < 10^-d, capped at the common precision.
int agreeing_digits(const Real& a, const Real& b);

}  // namespace wz
