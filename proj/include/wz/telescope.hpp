#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "wz/hyperterm.hpp"

namespace wz {

/// sum_i coeffs[i](n) F(n + i, k) = G(n, k + 1) - G(n, k) with G = certificate * F.
struct Telescoper {
  int order = 0;
  std::vector<UPoly> coeffs;
  RationalFunction certificate;
};

/// c(n) = constant * poly(n) * z^n * prod (alpha)_n / prod (beta)_n, with
/// every base positive and poly monic. poly carries the zeros that a
/// nonpositive denominator base would otherwise turn into poles.
struct Multiplier {
  Rational z{1};
  std::vector<Rational> num_poch;
  std::vector<Rational> den_poch;
  Rational constant{1};
  UPoly poly{1};

  Rational operator()(long n) const;
  /// c(n + 1) / c(n) as a rational function of n.
  URatFunc ratio() const;
  /// t(n, k) c(n) as a hypergeometric term.
  HypergeometricTerm apply(const HypergeometricTerm& t) const;
};

/// y(k) with y(k + 1) r(k) - y(k) = 1 when the term with ratio r has a
/// hypergeometric antidifference G = y t; nullopt otherwise.
std::optional<RationalFunction> gosper(const RationalFunction& r);

/// Minimal-order telescoper of the term with shift quotients q_n, q_k,
/// trying orders 1..max_order.
Telescoper zeilberger(const RationalFunction& q_n, const RationalFunction& q_k, int max_order = 3);
Telescoper zeilberger(const HypergeometricTerm& t, int max_order = 3);

/// Exact check of sum_i a_i Q_i = R(n, k + 1) q_k - R(n, k).
bool certify(const RationalFunction& q_n, const RationalFunction& q_k, const Telescoper& tel);
bool certify(const HypergeometricTerm& t, const Telescoper& tel);

/// Multiplier c(n) with c(n + 1) / c(n) = -a_1(n) / a_0(n), which turns an
/// order-1 telescoper into N - 1.
Multiplier normalize_first_order(const Telescoper& tel);

nlohmann::json to_json(const Telescoper& t);
nlohmann::json to_json(const Multiplier& m);

}  // namespace wz
