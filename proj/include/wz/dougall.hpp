#pragma once

#include <string>
#include <vector>

#include "wz/hyperterm.hpp"
#include "wz/numerics.hpp"

namespace wz {

enum class SeriesKind { omega, phi };

/// Parameters of Omega(a, b, c, d, e) or of its alternating limit
/// Phi(a, b, c, d), where e is unused.
struct DougallBase {
  SeriesKind kind = SeriesKind::omega;
  Rational a, b, c, d, e;

  /// Parameters in slot order: 5 for Omega, 4 for Phi.
  std::vector<Rational> params() const;
  static DougallBase from_params(SeriesKind kind, const std::vector<Rational>& p);
};

/// Per-parameter slopes in n.
struct Pattern {
  std::vector<int> slopes;
};

/// U(n, k) = A(a + s_a n, b + s_b n, ..., k) for Omega and the matching B
/// term for Phi.
HypergeometricTerm build_term(const DougallBase& base, const Pattern& pattern);

/// 1 + 2a - b - c - d - e; Omega converges iff this is positive.
Rational convergence_margin(const DougallBase& base);

/// Low-assurance estimate of a slowly converging sum; digits is the number
/// of decimal places the error estimate supports.
struct SlowSum {
  Real value;
  Real error;
  int digits = 0;
  bool reliable = false;
};

/// sum over k >= 0 of t(n, k) for terms decaying like a power of k.
/// Constant-sign terms: Richardson extrapolation of partial sums at
/// K = 32 * 2^j with the exponents implied by the k-asymptotics of t.
/// Alternating terms: iterated averaging of the last partial sums.
SlowSum slow_sum_k(const HypergeometricTerm& t, long n, const PrecisionContext& ctx);

/// Omega(a, b, c, d, e) or Phi(a, b, c, d) by slow_sum_k. Throws when
/// Omega's convergence margin is not positive.
SlowSum slow_sum_estimate(const DougallBase& base, const PrecisionContext& ctx);

std::string kind_name(SeriesKind kind);
SeriesKind parse_kind(const std::string& s);
DougallBase parse_base(SeriesKind kind, const std::string& csv);
Pattern parse_pattern(const std::string& csv);
std::string to_string(const DougallBase& base);
std::string to_string(const Pattern& p);

}  // namespace wz
