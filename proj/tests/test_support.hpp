#pragma once

#include <random>

#include "wz/bpoly.hpp"
#include "wz/dougall.hpp"
#include "wz/hyperterm.hpp"
#include "wz/ratfunc.hpp"

namespace wz::testing {

inline Rational random_rational(std::mt19937_64& rng, int mag = 5) {
  std::uniform_int_distribution<int> num(-mag, mag), den(1, 4);
  return make_rational(num(rng), den(rng));
}

inline UPoly random_upoly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  return UPoly(std::move(c));
}

/// Random polynomial with total degree <= degree.
inline BPoly random_bpoly(std::mt19937_64& rng, int degree) {
  std::vector<UPoly> ks;
  for (int j = 0; j <= degree; ++j) ks.push_back(random_upoly(rng, degree - j));
  return BPoly(std::move(ks));
}

inline RationalFunction random_rf(std::mt19937_64& rng, int degree) {
  BPoly d;
  while (d.is_zero()) d = random_bpoly(rng, degree);
  return {random_bpoly(rng, degree), d};
}

/// Ratio t(k+1)/t(k) of t = h(k+1) - h(k) with h = p(k) (a)_k / (b)_k z^k,
/// so t is Gosper-summable by construction. Zero when t vanishes.
inline RationalFunction random_summable_ratio(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  const BPoly k = BPoly::k();
  UPoly p;
  while (p.is_zero()) p = random_upoly(rng, deg(rng));
  const BPoly pk = BPoly::in_k(p);
  const Rational a = random_rational(rng);
  const Rational b = random_rational(rng);
  Rational z;
  while (z == 0) z = random_rational(rng);
  const BPoly s = pk.shift_k(1) * (k + BPoly(a)) * z - pk * (k + BPoly(b));
  if (s.is_zero()) return RationalFunction();
  return RationalFunction(z * (k + BPoly(a)) * s.shift_k(1), (k + BPoly(b + 1)) * s);
}

/// Random base with positive parameters and a pattern whose derived
/// denominator slopes are nonnegative.
inline std::pair<DougallBase, Pattern> random_admissible(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), sa(0, 3), num(1, 9), den(1, 4);
  const SeriesKind kind = coin(rng) ? SeriesKind::omega : SeriesKind::phi;
  const int count = kind == SeriesKind::omega ? 5 : 4;
  std::vector<Rational> params;
  for (int i = 0; i < count; ++i) params.push_back(make_rational(num(rng), den(rng)));
  Pattern pattern;
  pattern.slopes.push_back(sa(rng));
  std::uniform_int_distribution<int> rest(0, pattern.slopes[0]);
  for (int i = 1; i < count; ++i) pattern.slopes.push_back(rest(rng));
  return {DougallBase::from_params(kind, params), pattern};
}

/// q_n(n, k + 1) q_k(n, k) = q_k(n + 1, k) q_n(n, k).
inline bool quotients_compatible(const HypergeometricTerm& t) {
  const RationalFunction qn = shift_quotient(t, Var::n);
  const RationalFunction qk = shift_quotient(t, Var::k);
  return qn.shift_k(1) * qk == qk.shift_n(1) * qn;
}

}  // namespace wz::testing
