#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wz/upoly.hpp"

namespace wz {

/// Polynomial in n and k over the rationals, stored as a polynomial in k
/// whose coefficients are polynomials in n. Terms are ordered graded
/// lexicographically with n > k; the leading term is the maximum.
class BPoly {
 public:
  BPoly() = default;
  BPoly(const Rational& c) : BPoly(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  BPoly(long c) : BPoly(Rational(c)) {}          // NOLINT(google-explicit-constructor)
  /// Polynomial in n only.
  explicit BPoly(const UPoly& in_n);
  /// From coefficients of k^0, k^1, ... (each a polynomial in n).
  explicit BPoly(std::vector<UPoly> in_k);

  static BPoly n() { return BPoly(UPoly::x()); }
  static BPoly k() { return BPoly(std::vector<UPoly>{UPoly(), UPoly(1)}); }
  /// Interprets p as a polynomial in k.
  static BPoly in_k(const UPoly& p);
  /// c0 + cn n + ck k
  static BPoly linear(const Rational& c0, const Rational& cn, const Rational& ck);

  bool is_zero() const { return c_.empty(); }
  int deg_k() const { return static_cast<int>(c_.size()) - 1; }
  int deg_n() const;
  bool is_constant() const;
  /// True when the polynomial does not involve n.
  bool free_of_n() const;
  const std::vector<UPoly>& k_coeffs() const { return c_; }
  const UPoly& coeff_k(int j) const;
  Rational coeff(int i_n, int j_k) const;

  /// Leading exponent (deg_n, deg_k) and coefficient under graded lex, n > k.
  std::pair<int, int> leading_exponent() const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& n, const Rational& k) const;
  /// Polynomial in k obtained by fixing n.
  UPoly at_n(const Rational& n0) const;
  /// Polynomial in n obtained by fixing k.
  UPoly at_k(const Rational& k0) const;
  /// P(n, k + c)
  BPoly shift_k(const Rational& c) const;
  /// P(n + c, k)
  BPoly shift_n(const Rational& c) const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const Rational& s);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(BPoly a, const Rational& s) { return a *= s; }
  friend BPoly operator*(const Rational& s, BPoly a) { return a *= s; }
  friend BPoly operator*(long s, BPoly a) { return a *= Rational(s); }
  friend BPoly operator*(BPoly a, long s) { return a *= Rational(s); }
  friend BPoly operator*(const UPoly& in_n, const BPoly& a);
  friend BPoly operator-(BPoly a);
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

  /// Expanded sparse form in canonical order, e.g. "2*n*k + 3*n + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> c_;
};

BPoly pow(const BPoly& p, int e);

/// Gcd of the k-coefficients (monic polynomial in n; 1 for zero input).
UPoly content_k(const BPoly& p);
/// p divided by its k-content.
BPoly primitive_k(const BPoly& p);
/// Scales p to coprime integer coefficients with positive leading
/// coefficient; returns the scale factor s with p = s * result.
std::pair<BPoly, Rational> normalize(const BPoly& p);
/// Quotient of a by b when b divides a in Q[n, k].
std::optional<BPoly> try_exact_div(const BPoly& a, const BPoly& b);
BPoly exact_div(const BPoly& a, const BPoly& b);
/// Divides every coefficient by a polynomial in n (exactly).
BPoly exact_div(const BPoly& a, const UPoly& in_n);

}  // namespace wz
