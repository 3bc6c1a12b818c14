#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wz/dougall.hpp"
#include "wz/kernels.hpp"
#include "wz/telescope.hpp"

namespace wz {

/// F(n+1, k) - F(n, k) = G(n, k+1) - G(n, k) with G = R F.
struct WZPair {
  DougallBase base;
  Pattern pattern;
  HypergeometricTerm U;
  Telescoper telescoper;  // of U
  Multiplier multiplier;
  HypergeometricTerm F;
  RationalFunction R;

  HypergeometricTerm G() const { return F.times(R); }
  /// The telescoper N - 1 with certificate R.
  Telescoper wz_telescoper() const;
};

WZPair build_wz_pair(const DougallBase& base, const Pattern& pattern, int max_order = 3);

/// term(n) = scale * poly(n) * extra(n) * prod (alpha)_n / prod (beta)_n * z^n.
struct ClosedSeries {
  UPoly poly;
  std::vector<Rational> weight_num;
  std::vector<Rational> weight_den;
  URatFunc extra{UPoly(1), UPoly(1)};
  Rational z{1};
  Rational scale{1};

  Rational term(long n) const;
  /// term(n + 1) / term(n) without the scale.
  URatFunc ratio() const;
};

/// sum_n G(n, 0) in canonical form: linear factors are absorbed into the
/// Pochhammer weight via (x)_n (x + n) = x (x + 1)_n, weight pairs whose
/// bases differ by an integer become rational factors, and p(n) has
/// coprime integer coefficients with positive leading coefficient.
ClosedSeries boundary_series(const WZPair& pair);

/// Sum of the series with a rigorous tail bound.
SeriesSum series_value(const ClosedSeries& s, const PrecisionContext& ctx);

struct IdentityReport {
  Real lhs;
  Real rhs_inner_sum;
  bool inner_exact = false;  // the slice sum is an exact rational
  bool inner_reliable = true;
  int inner_digits = 0;
  Extrapolation boundary;
  Rational boundary_exponent;  // leading k-exponent of the boundary sums
  int digits = 0;              // decimal places the comparison could use
  bool holds = false;
  Real residual;  // lhs - inner - boundary
};

/// sum_n G(n, 0) = sum_k F(0, k) + lim_{K -> oo} sum_n G(n, K), with the
/// boundary sums sampled at K = 50 * 2^j.
IdentityReport sum_identity_report(const WZPair& pair, const PrecisionContext& ctx, Exec exec = Exec::parallel);

/// The boundary limit of sum_n G(n, K) as K grows, by extrapolation.
Extrapolation boundary_limit(const HypergeometricTerm& G, long first_n, const PrecisionContext& ctx, Exec exec,
                             Rational* exponent = nullptr);

/// sum_k F(m, k) = sum_n G(n, 0) - sum_{j < m} G(j, 0), after checking
/// that the boundary limit of the shifted pair vanishes.
Real shifted_pair_value(const WZPair& pair, long m, const PrecisionContext& ctx, Exec exec = Exec::parallel);

struct ConstancyReport {
  std::vector<long> ks;
  std::vector<Real> values;
  Real max_deviation;
  /// lim_{k -> -1/2} G(0, k) when every G(n, k) with 1 <= n <= 4 tends to 0 there.
  std::optional<PiMonomial> half_limit;
};

/// S(k) = sum_n G(n, k) at each integer k >= 0 of ks.
ConstancyReport constancy_check(const WZPair& pair, const std::vector<long>& ks, const PrecisionContext& ctx,
                                Exec exec = Exec::parallel);

/// coeff * pi^(p/2) at ctx precision.
Real pi_monomial_value(const PiMonomial& m, const PrecisionContext& ctx);

nlohmann::json to_json(const ClosedSeries& s);
nlohmann::json to_json(const IdentityReport& r, int digits);
std::string series_string(const ClosedSeries& s);

}  // namespace wz
