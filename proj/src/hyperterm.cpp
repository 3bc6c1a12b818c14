#include "wz/hyperterm.hpp"

#include <algorithm>

namespace wz {

void HypergeometricTerm::validate() const {
  if (z == 0) throw Error("hypergeometric term with z = 0");
  for (const PochFactor& f : poch) {
    if (f.slope < 0) throw Error("negative Pochhammer slope in base " + base_string(f));
    if (f.var == Var::n && f.slope != 0) throw Error("Pochhammer with exponent n must have a constant base");
    if (f.mult < 1) throw Error("Pochhammer multiplicity must be positive");
  }
}

HypergeometricTerm HypergeometricTerm::times(const RationalFunction& r) const {
  HypergeometricTerm out = *this;
  out.prefactor *= r;
  return out;
}

std::string base_string(const PochFactor& f) {
  if (f.slope == 0) return to_string(f.intercept);
  const std::string n_part = f.slope == 1 ? "n" : std::to_string(f.slope) + "*n";
  if (f.intercept == 0) return n_part;
  return to_string(f.intercept) + "+" + n_part;
}

RationalFunction shift_quotient(const HypergeometricTerm& t, Var var) {
  t.validate();
  const BPoly n = BPoly::n();
  const BPoly k = BPoly::k();
  BPoly num(1);
  BPoly den(1);
  auto apply = [&](const PochFactor& f, const BPoly& top, const BPoly& bottom) {
    BPoly a = pow(top, f.mult);
    BPoly b = pow(bottom, f.mult);
    if (f.pos == Position::numerator) {
      num = num * a;
      den = den * b;
    } else {
      num = num * b;
      den = den * a;
    }
  };
  for (const PochFactor& f : t.poch) {
    const BPoly x = BPoly(f.base());
    if (var == Var::k) {
      if (f.var == Var::k) apply(f, x + k, BPoly(1));
    } else if (f.var == Var::n) {
      apply(f, x + n, BPoly(1));
    } else if (f.slope > 0) {
      // (x + beta)_k / (x)_k = prod_{i < beta} (x + k + i) / (x + i)
      BPoly top(1);
      BPoly bottom(1);
      for (int i = 0; i < f.slope; ++i) {
        top = top * (x + k + BPoly(i));
        bottom = bottom * (x + BPoly(i));
      }
      apply(f, top, bottom);
    }
  }
  RationalFunction q(num, den);
  if (var == Var::k) {
    if (t.alt_sign_k) q = -q;
    if (!t.prefactor.is_zero()) q *= t.prefactor.shift_k(1) / t.prefactor;
  } else {
    q *= RationalFunction(t.z);
    if (!t.prefactor.is_zero()) q *= t.prefactor.shift_n(1) / t.prefactor;
  }
  return q;
}

namespace {

// Strips factors (x - x0) from p, returning the multiplicity removed.
int strip_root(UPoly& p, const Rational& x0) {
  int m = 0;
  const UPoly lin = UPoly::linear(-x0, 1);
  while (!p.is_zero() && p(x0) == 0) {
    p = exact_div(p, lin);
    ++m;
  }
  return m;
}

// Same for a bivariate polynomial and the factor (n - n0).
int strip_n_root(BPoly& p, const Rational& n0) {
  int m = 0;
  const UPoly lin = UPoly::linear(-n0, 1);
  while (!p.is_zero() && p.at_n(n0).is_zero()) {
    p = exact_div(p, lin);
    ++m;
  }
  return m;
}

// Accumulates value * 0^order with bookkeeping of what vanished.
struct LimitAccumulator {
  Rational value{1};
  int order = 0;
  bool identically_zero = false;
  std::string zero_factor;
  std::string pole_factor;

  void linear(const Rational& v, const Rational& slope, bool numerator, int mult, const std::string& name) {
    for (int r = 0; r < mult; ++r) {
      if (v != 0) {
        if (numerator) {
          value *= v;
        } else {
          value /= v;
        }
      } else if (slope == 0) {
        if (numerator) {
          identically_zero = true;
          zero_factor = name;
        } else {
          throw PoleError("pole: denominator factor " + name + " vanishes identically");
        }
      } else {
        if (numerator) {
          value *= slope;
          ++order;
        } else {
          value /= slope;
          --order;
          pole_factor = name;
        }
      }
    }
  }

  Rational finish(const std::string& where) const {
    if (identically_zero) return 0;
    if (order > 0) return 0;
    if (order < 0) {
      throw PoleError("pole at " + where + (pole_factor.empty() ? "" : ": factor " + pole_factor + " vanishes"));
    }
    return value;
  }
};

std::string point(long n, const std::string& k) { return "(n, k) = (" + std::to_string(n) + ", " + k + ")"; }

}  // namespace

Rational eval_exact(const HypergeometricTerm& t, long n0, long k0) {
  if (n0 < 0 || k0 < 0) throw Error("eval_exact needs n, k >= 0");
  t.validate();
  const Rational n_q(n0);
  LimitAccumulator acc;
  acc.value = t.constant * pow(t.z, static_cast<unsigned long>(n0));
  if (t.alt_sign_k && (k0 % 2 == 1)) acc.value = -acc.value;
  for (const PochFactor& f : t.poch) {
    const bool num = f.pos == Position::numerator;
    const std::string name = "(" + base_string(f) + ")_" + (f.var == Var::k ? "k" : "n");
    if (f.var == Var::n) {
      const Rational v = pochhammer(f.intercept, n0);
      if (v == 0 && !num) throw PoleError("pole at " + point(n0, std::to_string(k0)) + ": factor " + name + " vanishes");
      acc.linear(v, 0, num, f.mult, name);
      continue;
    }
    const Rational x = f.intercept + f.slope * n_q;
    for (long i = 0; i < k0; ++i) acc.linear(x + i, f.slope, num, f.mult, name);
  }
  UPoly pn = t.prefactor.num().at_k(k0);
  UPoly pd = t.prefactor.den().at_k(k0);
  if (pd.is_zero()) throw PoleError("pole at " + point(n0, std::to_string(k0)) + ": prefactor denominator vanishes");
  if (pn.is_zero()) return 0;
  acc.order += strip_root(pn, n_q);
  const int md = strip_root(pd, n_q);
  if (md > 0) {
    acc.order -= md;
    acc.pole_factor = "prefactor denominator " + t.prefactor.den().to_string();
  }
  acc.value *= pn(n_q) / pd(n_q);
  return acc.finish(point(n0, std::to_string(k0)));
}

Real eval_float(const HypergeometricTerm& t, long n, long k, int digits) {
  return Real::from_rational(eval_exact(t, n, k), digits);
}

HypergeometricTerm regularize_zero_intercepts(const HypergeometricTerm& t) {
  HypergeometricTerm out = t;
  out.poch.clear();
  const BPoly k = BPoly::k();
  for (PochFactor f : t.poch) {
    if (f.var == Var::k && f.intercept == 0 && f.slope > 0) {
      // (x)_k = x (x + 1)_k / (x + k)
      const BPoly x(f.base());
      RationalFunction r(pow(x, f.mult), pow(x + k, f.mult));
      if (f.pos == Position::denominator) r = r.inverse();
      out.prefactor *= r;
      f.intercept = 1;
    }
    out.poch.push_back(f);
  }
  return out;
}

namespace {

// Gamma(x) for integer or half-integer x that is not a pole, as
// coeff * sqrt(pi)^half.
PiMonomial gamma_value(const Rational& x) {
  if (is_integer(x)) {
    if (x <= 0) throw PoleError("Gamma pole at " + to_string(x));
    Rational f = 1;
    for (Integer i = 1; i < x.get_num(); ++i) f *= Rational(i);
    return {f, 0};
  }
  if (x.get_den() != 2) throw Error("Gamma at " + to_string(x) + " is not a half-integer value");
  // Gamma(1/2 + m) = (1/2)_m sqrt(pi); below 1/2 step down with Gamma(y - 1) = Gamma(y) / (y - 1).
  const Rational half = make_rational(1, 2);
  Rational c = 1;
  Rational y = half;
  if (x > half) {
    for (; y < x; y += 1) c *= y;
  } else {
    for (; y > x; y -= 1) c /= (y - 1);
  }
  return {c, 1};
}

// Residue data for Gamma near a pole -m: Gamma(-m + e) ~ (-1)^m / (m! e).
Rational gamma_residue(const Rational& x) {
  const long m = -x.get_num().get_si();
  Rational f = 1;
  for (long i = 2; i <= m; ++i) f *= i;
  return (m % 2 == 0 ? Rational(1) : Rational(-1)) / f;
}

// 1 / Gamma(x) near x = -m, as a multiple of (x + m): (-1)^m m!.
Rational inverse_gamma_slope(const Rational& x) { return 1 / gamma_residue(x); }

}  // namespace

PiMonomial limit_at_half_integer(const HypergeometricTerm& term, long n0, const Rational& k0) {
  if (n0 < 0) throw Error("limit_at_half_integer needs n >= 0");
  const HypergeometricTerm t = regularize_zero_intercepts(term);
  t.validate();
  const Rational n_q(n0);
  const std::string where = point(n0, to_string(k0));
  if (t.alt_sign_k && !is_integer(k0)) throw Error("(-1)^k is not defined at k = " + to_string(k0));

  Rational c = t.constant * pow(t.z, static_cast<unsigned long>(n0));
  if (t.alt_sign_k && k0.get_num() % 2 != 0) c = -c;
  int half_pi = 0;
  int n_order = 0;
  int k_order = 0;
  auto gamma_times = [&](const Rational& arg, int e) {
    // multiplies by Gamma(arg)^e as k -> k0 (arg already includes k0)
    if (is_integer(arg) && arg <= 0) {
      k_order -= e;
      const Rational r = gamma_residue(arg);
      for (int i = 0; i < std::abs(e); ++i) c = e > 0 ? Rational(c * r) : Rational(c / r);
      return;
    }
    const PiMonomial g = gamma_value(arg);
    for (int i = 0; i < std::abs(e); ++i) c = e > 0 ? Rational(c * g.coeff) : Rational(c / g.coeff);
    half_pi += e * g.half_pi_power;
  };

  for (const PochFactor& f : t.poch) {
    const int e = f.pos == Position::numerator ? f.mult : -f.mult;
    if (f.var == Var::n) {
      const Rational v = pochhammer(f.intercept, n0);
      if (v == 0) {
        if (e > 0) return {0, 0};
        throw PoleError("pole at " + where + ": factor (" + base_string(f) + ")_n vanishes");
      }
      for (int i = 0; i < f.mult; ++i) c = e > 0 ? Rational(c * v) : Rational(c / v);
      continue;
    }
    // (x)_k = Gamma(x + k) / Gamma(x) with x = alpha + beta n0.
    const Rational x = f.intercept + f.slope * n_q;
    if (is_integer(x) && x <= 0) {
      if (f.slope == 0) {
        if (e > 0) return {0, 0};
        throw PoleError("pole at " + where + ": factor (" + base_string(f) + ")_k has a nonpositive integer base");
      }
      // 1/Gamma(x) vanishes to first order as n -> n0.
      n_order += e;
      const Rational s = inverse_gamma_slope(x) * f.slope;
      for (int i = 0; i < f.mult; ++i) c = e > 0 ? Rational(c * s) : Rational(c / s);
    } else {
      gamma_times(x, -e);
    }
    gamma_times(x + k0, e);
  }

  BPoly pn = t.prefactor.num();
  BPoly pd = t.prefactor.den();
  n_order += strip_n_root(pn, n_q) - strip_n_root(pd, n_q);
  if (n_order > 0) return {0, 0};
  if (n_order < 0) throw PoleError("pole at " + where + " along n");
  UPoly qn = pn.at_n(n_q);
  UPoly qd = pd.at_n(n_q);
  if (qn.is_zero()) return {0, 0};
  k_order += strip_root(qn, k0) - strip_root(qd, k0);
  c *= qn(k0) / qd(k0);
  if (k_order > 0) return {0, 0};
  if (k_order < 0) throw PoleError("pole at " + where + " along k");
  return {c, half_pi};
}

nlohmann::json to_json(const HypergeometricTerm& t) {
  nlohmann::json poch = nlohmann::json::array();
  for (const PochFactor& f : t.poch) {
    poch.push_back({{"base", base_string(f)},
                    {"var", f.var == Var::k ? "k" : "n"},
                    {"pos", f.pos == Position::numerator ? "num" : "den"},
                    {"mult", f.mult}});
  }
  return {{"constant", to_string(t.constant)},
          {"z", to_string(t.z)},
          {"alt_sign_k", t.alt_sign_k},
          {"prefactor", t.prefactor.to_string()},
          {"poch", poch}};
}

}  // namespace wz
