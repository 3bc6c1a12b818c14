#include "wz/accelerate.hpp"

#include <algorithm>
#include <map>

#include "wz/algebra.hpp"

namespace wz {

Telescoper WZPair::wz_telescoper() const { return {1, {UPoly(-1), UPoly(1)}, R}; }

WZPair build_wz_pair(const DougallBase& base, const Pattern& pattern, int max_order) {
  WZPair p;
  p.base = base;
  p.pattern = pattern;
  p.U = build_term(base, pattern);
  p.telescoper = zeilberger(p.U, max_order);
  if (p.telescoper.order != 1) {
    throw Error("order > 1: the minimal telescoper has order " + std::to_string(p.telescoper.order));
  }
  p.multiplier = normalize_first_order(p.telescoper);
  p.F = p.multiplier.apply(p.U);
  // c a_0 U + c a_1 U(n+1) telescopes, and c(n+1) a_0 = -c(n) a_1.
  p.R = -p.telescoper.certificate / RationalFunction(BPoly(p.telescoper.coeffs[0]));
  if (!certify(p.F, p.wz_telescoper())) throw Error("derived WZ pair fails certification");
  return p;
}

Rational ClosedSeries::term(long n) const {
  Rational v = scale * poly(n) * extra(n) * pow(z, static_cast<unsigned long>(n));
  for (const Rational& a : weight_num) v *= pochhammer(a, n);
  for (const Rational& b : weight_den) v /= pochhammer(b, n);
  return v;
}

URatFunc ClosedSeries::ratio() const {
  UPoly num = z * poly.shifted(1) * extra.num.shifted(1) * extra.den;
  UPoly den = poly * extra.num * extra.den.shifted(1);
  for (const Rational& a : weight_num) num *= UPoly::linear(a, 1);
  for (const Rational& b : weight_den) den *= UPoly::linear(b, 1);
  return URatFunc::make(num, den);
}

namespace {

// Signed multiplicities: > 0 numerator, < 0 denominator.
using Multiset = std::map<Rational, int>;

void add(Multiset& m, const Rational& key, int count) {
  const int v = (m[key] += count);
  if (v == 0) m.erase(key);
}

int count(const Multiset& m, const Rational& key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

bool nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

struct Canonical {
  Multiset weight;   // Pochhammer bases
  Multiset linear;   // factors (n + beta), keyed by beta
  UPoly residual_num{1};
  UPoly residual_den{1};
  Rational scale{1};

  // (x)_n (n + x) = x (x + 1)_n, applied in whichever direction removes a
  // linear factor.
  bool absorb_one() {
    for (const auto& [beta, c] : linear) {
      if (nonpositive_integer(beta)) continue;
      if (c > 0) {
        if (count(weight, beta) > 0) return move(beta, beta, beta + 1, 1, beta);
        if (count(weight, beta + 1) < 0 && !nonpositive_integer(beta)) return move(beta, beta + 1, beta, -1, beta);
      } else {
        if (count(weight, beta) < 0) return move(beta, beta, beta + 1, -1, 1 / beta);
        if (count(weight, beta + 1) > 0) return move(beta, beta + 1, beta, 1, 1 / beta);
      }
    }
    return false;
  }

  // Replaces one base `from` by `to` on the side `sign`, removes one linear
  // factor (n + beta) and multiplies the scale by `factor`.
  bool move(Rational beta, Rational from, Rational to, int sign, Rational factor) {
    const int c = count(linear, beta);
    add(weight, from, -sign);
    add(weight, to, sign);
    add(linear, beta, c > 0 ? -1 : 1);
    scale *= factor;
    return true;
  }

  // (alpha)_n / (alpha + d)_n = (alpha)_d / (n + alpha)_d and its mirror.
  bool split_pair() {
    for (const auto& [a, ca] : weight) {
      for (const auto& [b, cb] : weight) {
        if (ca <= 0 || cb >= 0) continue;
        const Rational d = b - a;
        if (!is_integer(d) || d == 0) continue;
        const long steps = Rational(abs(d)).get_num().get_si();
        const Rational lo = d > 0 ? a : b;
        const int side = d > 0 ? -1 : 1;
        const Rational from_a = a;
        const Rational from_b = b;
        add(weight, from_a, -1);
        add(weight, from_b, 1);
        for (long i = 0; i < steps; ++i) add(linear, lo + i, side);
        if (d > 0) {
          scale *= pochhammer(lo, steps);
        } else {
          scale /= pochhammer(lo, steps);
        }
        return true;
      }
    }
    return false;
  }
};

void add_roots(Multiset& linear, const UPoly& p, int sign, UPoly& residual, Rational& scale) {
  const RootFactorization f = rational_roots(p);
  for (const auto& [r, m] : f.roots) add(linear, -r, sign * m);
  // p = residual * prod (x - r)^m, and the monic linear factors carry no scale.
  if (sign > 0) {
    scale *= f.residual.lc();
    residual *= f.residual * Rational(1 / f.residual.lc());
  } else {
    scale /= f.residual.lc();
    residual *= f.residual * Rational(1 / f.residual.lc());
  }
}

}  // namespace

ClosedSeries boundary_series(const WZPair& pair) {
  const HypergeometricTerm& F = pair.F;
  const UPoly rn = pair.R.num().at_k(0);
  const UPoly rd = pair.R.den().at_k(0);
  const UPoly fn = F.prefactor.num().at_k(0);
  const UPoly fd = F.prefactor.den().at_k(0);
  if (rd.is_zero() || fd.is_zero()) throw PoleError("pole at k=0");
  const URatFunc rho = URatFunc::make(F.constant * rn * fn, rd * fd);

  ClosedSeries out;
  out.z = F.z;
  if (rho.is_zero()) {
    out.poly = UPoly();
    return out;
  }
  for (const Rational& r : rational_roots(rho.den).flat()) {
    if (is_integer(r) && r >= 0) throw PoleError("pole at k=0: G(n, 0) is infinite at n = " + to_string(r));
  }

  Canonical c;
  for (const PochFactor& f : F.poch) {
    if (f.var != Var::n) continue;
    add(c.weight, f.intercept, f.pos == Position::numerator ? f.mult : -f.mult);
  }
  add_roots(c.linear, rho.num, 1, c.residual_num, c.scale);
  add_roots(c.linear, rho.den, -1, c.residual_den, c.scale);
  while (c.absorb_one()) {
  }
  while (c.split_pair()) {
  }

  UPoly num = c.residual_num;
  UPoly den = c.residual_den;
  for (const auto& [beta, m] : c.linear) {
    if (m > 0) num *= pow(UPoly::linear(beta, 1), m);
    if (m < 0) den *= pow(UPoly::linear(beta, 1), -m);
  }
  const Rational cn = content(num);
  const Rational cd = content(den);
  out.poly = num * Rational(1 / cn);
  out.extra = URatFunc{UPoly(1), den * Rational(1 / cd)};
  out.scale = c.scale * cn / cd;
  for (const auto& [b, m] : c.weight) {
    for (int i = 0; i < std::abs(m); ++i) (m > 0 ? out.weight_num : out.weight_den).push_back(b);
  }
  return out;
}

SeriesSum series_value(const ClosedSeries& s, const PrecisionContext& ctx) {
  ctx.validate();
  if (s.poly.is_zero() || s.scale == 0) return {Real::zero(ctx.places()), 0, Rational(0)};
  const RatioBound rb = geometric_ratio_bound(s.ratio());
  Rational h = 1;  // weight * z^n
  long last = -1;
  auto term = [&](long n) -> Rational {
    if (n != last + 1) throw Error("terms must be requested in order");
    if (n > 0) {
      h *= s.z;
      for (const Rational& a : s.weight_num) h *= a + (n - 1);
      for (const Rational& b : s.weight_den) h /= b + (n - 1);
    }
    last = n;
    return s.scale * s.poly(n) * s.extra(n) * h;
  };
  return sum_with_geometric_tail(term, rb.rho, rb.start, ctx);
}

namespace {

constexpr long kBoundaryK0 = 50;

int boundary_levels(const PrecisionContext& ctx) { return std::clamp(ctx.digits / 5 + 4, 6, 14); }

int supported_digits(const Real& value, const Real& error, int cap) {
  if (error.is_zero()) return cap;
  return std::min(cap, agreeing_digits(value, value + error));
}

}  // namespace

Extrapolation boundary_limit(const HypergeometricTerm& G, long first_n, const PrecisionContext& ctx, Exec exec,
                             Rational* exponent) {
  std::optional<Rational> lead;
  std::optional<Rational> tail_prev;
  std::optional<Rational> tail_last;
  for (long n = first_n; n <= first_n + 6; ++n) {
    const std::optional<Rational> e = k_exponent(G, n);
    if (n == first_n + 5) tail_prev = e;
    if (n == first_n + 6) tail_last = e;
    if (e && (!lead || *e > *lead)) lead = e;
  }
  if (tail_last && tail_prev && *tail_last > *tail_prev) {
    throw Error("boundary sums grow with n; no limit in k is established");
  }
  const int places = ctx.places();
  if (!lead) {
    if (exponent) *exponent = 0;
    return {Real::zero(places), Real::zero(places), true, 0};
  }
  if (*lead > 0) throw Error("boundary sums grow like K^" + to_string(*lead));
  if (exponent) *exponent = *lead;
  const Rational first = *lead < 0 ? Rational(-*lead) : Rational(1);

  PrecisionContext inner = ctx;
  inner.guard_digits += 5;
  std::vector<long> ks;
  for (int j = 0; j < boundary_levels(ctx); ++j) ks.push_back(kBoundaryK0 << j);
  std::vector<Real> sums = sums_over_n(G, ks, inner, exec);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (long j = 0; j < first_n; ++j) sums[i] -= step_in_k(G, j, ks[i], inner.places());
  }
  Extrapolation e = limit_extrapolate(sums, first);
  e.value = e.value.with_places(places);
  e.error = e.error.with_places(places);
  return e;
}

IdentityReport sum_identity_report(const WZPair& pair, const PrecisionContext& ctx, Exec exec) {
  IdentityReport r;
  r.lhs = series_value(boundary_series(pair), ctx).value;
  if (const std::optional<Rational> exact = terminating_k_sum(pair.F, 0)) {
    r.rhs_inner_sum = Real::from_rational(*exact, ctx.places());
    r.inner_exact = true;
    r.inner_digits = ctx.digits;
  } else {
    const SlowSum s = slow_sum_k(pair.F, 0, ctx);
    r.rhs_inner_sum = s.value;
    r.inner_reliable = s.reliable;
    r.inner_digits = s.digits;
  }
  r.boundary = boundary_limit(pair.G(), 0, ctx, exec, &r.boundary_exponent);
  r.residual = r.lhs - r.rhs_inner_sum - r.boundary.value;
  const int boundary_digits = supported_digits(r.boundary.value, r.boundary.error, ctx.digits);
  r.digits = std::min({ctx.digits, r.inner_digits, boundary_digits});
  const Real tol = Real::from_rational(pow(Rational(1, 10), static_cast<unsigned long>(std::max(r.digits - 2, 0))),
                                       ctx.places());
  r.holds = r.inner_reliable && r.boundary.converged && abs(r.residual) < tol;
  return r;
}

Real shifted_pair_value(const WZPair& pair, long m, const PrecisionContext& ctx, Exec exec) {
  if (m < 0) throw Error("shift must be nonnegative");
  const HypergeometricTerm G = pair.G();
  const Extrapolation lim = boundary_limit(G, m, ctx, exec);
  const Real threshold = Real::from_rational(pow(Rational(1, 10), static_cast<unsigned long>(std::min(ctx.digits, 12))),
                                             ctx.places());
  if (!(abs(lim.value) < threshold)) {
    throw Error("boundary limit of the pair shifted by " + std::to_string(m) + " does not vanish: " +
                lim.value.to_string(std::min(ctx.digits, 12)));
  }
  Real v = series_value(boundary_series(pair), ctx).value;
  for (long j = 0; j < m; ++j) v -= Real::from_rational(eval_exact(G, j, 0), ctx.places());
  return v;
}

ConstancyReport constancy_check(const WZPair& pair, const std::vector<long>& ks, const PrecisionContext& ctx, Exec exec) {
  ConstancyReport r;
  r.ks = ks;
  const HypergeometricTerm G = pair.G();
  for (long k : ks) {
    if (k < 0) throw Error("constancy_check evaluates at integers k >= 0");
  }
  r.values = sums_over_n(G, ks, ctx, exec);
  r.max_deviation = Real::zero(ctx.places());
  for (const Real& a : r.values) {
    for (const Real& b : r.values) {
      const Real d = abs(a - b);
      if (r.max_deviation < d) r.max_deviation = d;
    }
  }
  try {
    const Rational half(-1, 2);
    bool others_vanish = true;
    for (long n = 1; n <= 4 && others_vanish; ++n) others_vanish = limit_at_half_integer(G, n, half).coeff == 0;
    if (others_vanish) r.half_limit = limit_at_half_integer(G, 0, half);
  } catch (const Error&) {
    r.half_limit.reset();
  }
  return r;
}

Real pi_monomial_value(const PiMonomial& m, const PrecisionContext& ctx) {
  const int places = ctx.places();
  const Real pi = reference_constant("pi", ctx);
  Real v = Real::from_rational(m.coeff, places);
  const int p = m.half_pi_power;
  for (int i = 0; i < std::abs(p) / 2; ++i) v = p > 0 ? v * pi : v / pi;
  if (p % 2 != 0) {
    const Real root = sqrt(pi);
    v = p > 0 ? v * root : v / root;
  }
  return v;
}

nlohmann::json to_json(const ClosedSeries& s) {
  nlohmann::json num = nlohmann::json::array();
  nlohmann::json den = nlohmann::json::array();
  for (const Rational& a : s.weight_num) num.push_back(to_string(a));
  for (const Rational& b : s.weight_den) den.push_back(to_string(b));
  return {{"scale", to_string(s.scale)},
          {"poly", s.poly.to_string('n')},
          {"weight_num", num},
          {"weight_den", den},
          {"extra", "(" + s.extra.num.to_string('n') + ") / (" + s.extra.den.to_string('n') + ")"},
          {"z", to_string(s.z)}};
}

nlohmann::json to_json(const IdentityReport& r, int digits) {
  return {{"lhs", r.lhs.to_string(digits)},
          {"rhs_inner_sum", r.rhs_inner_sum.to_string(digits)},
          {"inner_exact", r.inner_exact},
          {"inner_reliable", r.inner_reliable},
          {"inner_digits", r.inner_digits},
          {"rhs_boundary_limit", r.boundary.value.to_string(digits)},
          {"boundary_error", r.boundary.error.to_string(5)},
          {"boundary_converged", r.boundary.converged},
          {"boundary_exponent", to_string(r.boundary_exponent)},
          {"digits", r.digits},
          {"holds", r.holds}};
}

std::string series_string(const ClosedSeries& s) {
  auto pochs = [](const std::vector<Rational>& v) {
    std::string out;
    std::map<Rational, int> m;
    for (const Rational& b : v) ++m[b];
    for (const auto& [b, c] : m) {
      if (!out.empty()) out += " ";
      out += "(" + to_string(b) + ")_n";
      if (c > 1) out += "^" + std::to_string(c);
    }
    return out.empty() ? std::string("1") : out;
  };
  std::string out = to_string(s.scale) + " * sum_n (" + s.poly.to_string('n') + ")";
  if (s.extra.den != UPoly(1) || s.extra.num != UPoly(1)) {
    out += " * (" + s.extra.num.to_string('n') + ")/(" + s.extra.den.to_string('n') + ")";
  }
  out += " * " + pochs(s.weight_num) + " / [" + pochs(s.weight_den) + "] * (" + to_string(s.z) + ")^n";
  return out;
}

}  // namespace wz
