#pragma once

#include <optional>
#include <vector>

#include "wz/hyperterm.hpp"
#include "wz/numerics.hpp"

namespace wz {

/// Serial loops are the reference; parallel ones use OpenMP and must give
/// bit-identical results.
enum class Exec { serial, parallel };

/// t(n, K) obtained from t(n, 0) by K steps with the exact k-quotient,
/// rounding once per step at `places`.
Real step_in_k(const HypergeometricTerm& t, long n, long K, int places);

/// sum_{k < K} t(n, k) for K = 0..count.
std::vector<Real> partial_sums_k(const HypergeometricTerm& t, long n, long count, int places);

/// sum over n >= 0 of t(n, K), with a rigorous geometric tail bound in n.
/// Extra guard digits absorb the rounding of the k-steps.
Real sum_over_n(const HypergeometricTerm& t, long K, const PrecisionContext& ctx);
std::vector<Real> sums_over_n(const HypergeometricTerm& t, const std::vector<long>& ks, const PrecisionContext& ctx,
                              Exec exec);

/// lambda with |t(n, k)| ~ C k^lambda as k grows; nullopt when t(n, k) is
/// eventually zero. Throws when t grows or decays factorially in k.
std::optional<Rational> k_exponent(const HypergeometricTerm& t, long n);

/// Exact sum over k of t(n, k) when the terms vanish for all large k: a
/// prefactor or constant that is zero at n, or a numerator (-m)_k. nullopt
/// otherwise.
std::optional<Rational> terminating_k_sum(const HypergeometricTerm& t, long n);

/// Exact check of sum_{k < K} (F(n+1, k) - F(n, k)) = G(n, K) - G(n, 0)
/// on 0 <= n <= n_max, 1 <= K <= k_max. Returns the failing (n, K).
std::vector<std::pair<long, long>> telescoping_failures(const HypergeometricTerm& F, const HypergeometricTerm& G,
                                                        long n_max, long k_max, Exec exec);

}  // namespace wz
