#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wz/ratfunc.hpp"
#include "wz/real.hpp"

namespace wz {

enum class Var { n, k };
enum class Position { numerator, denominator };

/// (alpha + beta n)_v raised to `mult`, with v the exponent variable.
/// Factors with exponent n have beta = 0.
struct PochFactor {
  Rational intercept;
  int slope = 0;
  Var var = Var::k;
  Position pos = Position::numerator;
  int mult = 1;

  UPoly base() const { return UPoly::linear(intercept, slope); }
  bool operator==(const PochFactor&) const = default;
};

/// constant * z^n * (-1)^k * prefactor(n, k) * product of Pochhammer factors.
struct HypergeometricTerm {
  Rational constant{1};
  Rational z{1};
  bool alt_sign_k = false;
  RationalFunction prefactor{1};
  std::vector<PochFactor> poch;

  /// Throws Error when a factor violates the slope or multiplicity rules.
  void validate() const;
  /// Same term times a rational function of (n, k).
  HypergeometricTerm times(const RationalFunction& r) const;
};

/// T(var + 1) / T as a reduced rational function of (n, k).
RationalFunction shift_quotient(const HypergeometricTerm& t, Var var);

/// Exact value at integers n, k >= 0. Where factors vanish or blow up
/// individually the value is the limit as n tends to the given integer
/// with k fixed; a PoleError names the factor when that limit is infinite.
Rational eval_exact(const HypergeometricTerm& t, long n, long k);

/// eval_exact rounded once to `digits` decimal places.
Real eval_float(const HypergeometricTerm& t, long n, long k, int digits);

/// Value of the form coeff * pi^(half_pi_power / 2).
struct PiMonomial {
  Rational coeff;
  int half_pi_power = 0;
};

/// Limit of T(n0, k) as k tends to a half-integer or integer k0, with n0
/// a nonnegative integer. Pochhammer symbols are read as Gamma quotients;
/// every Gamma argument must be an integer or half-integer.
PiMonomial limit_at_half_integer(const HypergeometricTerm& t, long n0, const Rational& k0);

/// Rewrites numerator factors (beta n)_k with zero intercept as
/// beta n (beta n + 1)_k / (beta n + k), so the vanishing factor is explicit
/// in the prefactor.
HypergeometricTerm regularize_zero_intercepts(const HypergeometricTerm& t);

std::string base_string(const PochFactor& f);
nlohmann::json to_json(const HypergeometricTerm& t);

}  // namespace wz
