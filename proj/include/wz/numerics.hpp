#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wz/ratfunc.hpp"
#include "wz/real.hpp"

namespace wz {

struct PrecisionContext {
  int digits = 30;
  int guard_digits = 10;
  long max_terms = 10000;

  /// Working decimal places.
  int places() const { return digits + guard_digits; }
  void validate() const;
};

/// |r(m)| <= rho < 1 for every integer m >= start.
struct RatioBound {
  Rational rho;
  long start = 0;
};

/// Rigorous geometric bound for a term ratio r(n) = t(n+1)/t(n), valid for
/// all real m >= start. Throws when the limit of |r| is not below 1.
RatioBound geometric_ratio_bound(const URatFunc& ratio);

struct SeriesSum {
  Real value;  // at ctx.places()
  long terms = 0;
  /// Bound on |value - exact sum|: tail plus half an ulp per rounding.
  Rational error_bound;
};

/// Sum of term(n), n = 0, 1, ..., stopping at the first N >= n0 with
/// |term(N)| rho / (1 - rho) < 10^-(digits + guard). term is called with
/// increasing n, once each.
SeriesSum sum_with_geometric_tail(const std::function<Rational(long)>& term, const Rational& rho, long n0,
                                  const PrecisionContext& ctx);

/// Sum over n >= 0 of t0 * prod_{j < n} ratio(j), with the tail bound taken
/// from geometric_ratio_bound(ratio). A zero term ends the sum exactly.
SeriesSum sum_hypergeometric(const Rational& t0, const URatFunc& ratio, const PrecisionContext& ctx);

struct Extrapolation {
  Real value;
  Real error;  // difference of the last two diagonal extrapolants
  bool converged = false;
  int levels = 0;
};

/// Richardson extrapolation of s(K) sampled at K = K0 * 2^j, assuming
/// s(K) = L + sum_i c_i K^-(first_exponent + i). All samples share one
/// precision.
Extrapolation limit_extrapolate(const std::vector<Real>& samples, const Rational& first_exponent = 1);
Extrapolation limit_extrapolate(const std::function<Real(long)>& seq, long k0, int levels, const Rational& first_exponent,
                                const PrecisionContext& ctx);

/// pi, zeta3 or catalan, correct to ctx.digits (carried at ctx.places()).
/// Values are cached per precision.
Real reference_constant(const std::string& name, const PrecisionContext& ctx);

/// Second, independent formula for the same constant (self-validation).
Real reference_constant_cross(const std::string& name, const PrecisionContext& ctx);

/// Formula used by reference_constant, for reports.
std::string reference_formula(const std::string& name);

}  // namespace wz
