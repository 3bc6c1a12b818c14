#include "wz/numerics.hpp"

#include <map>
#include <mutex>

namespace wz {

void PrecisionContext::validate() const {
  if (digits < 1) throw Error("digits must be positive");
  if (guard_digits < 1) throw Error("guard digits must be positive");
  if (max_terms < 1) throw Error("max_terms must be positive");
}

namespace {

Rational pow10_inverse(int places) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return Rational(Integer(1), p);
}

bool nonnegative_coeffs(const UPoly& p) {
  for (const Rational& c : p.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace

RatioBound geometric_ratio_bound(const URatFunc& ratio) {
  if (ratio.is_zero()) return {Rational(0), 0};
  const int dn = ratio.num.degree();
  const int dd = ratio.den.degree();
  if (dn > dd) throw Error("term ratio grows without bound; the series diverges");
  const Rational lead = dn == dd ? Rational(abs(ratio.num.lc() / ratio.den.lc())) : Rational(0);
  if (lead >= 1) throw Error("term ratio tends to " + to_string(lead) + " >= 1; no geometric tail bound");

  // |num| <= rho den on [N, oo) follows when den(x + N) and
  // rho den(x + N) -+ num(x + N) have no negative coefficients.
  const Rational rho = lead == 0 ? Rational(1, 2) : Rational((3 * lead + 1) / 4);
  const UPoly den = ratio.den * Rational(sgn(ratio.den.lc()));
  const UPoly upper = rho * den - ratio.num;
  const UPoly lower = rho * den + ratio.num;
  auto holds = [&](long n) {
    const UPoly d = den.shifted(n);
    return d(0) > 0 && nonnegative_coeffs(d) && nonnegative_coeffs(upper.shifted(n)) &&
           nonnegative_coeffs(lower.shifted(n));
  };
  if (holds(0)) return {rho, 0};
  long lo = 0;
  long hi = 1;
  while (!holds(hi)) {
    if (hi > (1L << 40)) throw Error("no usable geometric tail bound");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {rho, hi};
}

SeriesSum sum_with_geometric_tail(const std::function<Rational(long)>& term, const Rational& rho, long n0,
                                  const PrecisionContext& ctx) {
  ctx.validate();
  if (rho < 0 || rho >= 1) throw Error("ratio bound must lie in [0, 1)");
  const int places = ctx.places();
  const Rational tol = pow10_inverse(places);
  const Rational factor = rho / (1 - rho);
  SeriesSum out{Real::zero(places), 0, Rational(0)};
  for (long n = 0; n < ctx.max_terms; ++n) {
    const Rational t = term(n);
    out.value += Real::from_rational(t, places);
    out.terms = n + 1;
    if (n >= n0) {
      const Rational tail = abs(t) * factor;
      if (tail < tol) {
        out.error_bound = tail + Rational(out.terms) * tol / 2;
        return out;
      }
    }
  }
  throw Error("series did not reach its tail bound within " + std::to_string(ctx.max_terms) + " terms");
}

SeriesSum sum_hypergeometric(const Rational& t0, const URatFunc& ratio, const PrecisionContext& ctx) {
  const RatioBound rb = geometric_ratio_bound(ratio);
  Rational t = t0;
  bool ended = t0 == 0;
  long last_n = -1;
  auto term = [&](long n) -> Rational {
    if (n != last_n + 1) throw Error("terms must be requested in order");
    // Once a term vanishes all later ones do.
    if (n > 0 && !ended) {
      t *= ratio(Rational(n - 1));
      if (t == 0) ended = true;
    }
    last_n = n;
    return ended ? Rational(0) : t;
  };
  if (ended) return {Real::zero(ctx.places()), 0, Rational(0)};
  return sum_with_geometric_tail(term, rb.rho, rb.start, ctx);
}

namespace {

// 2^e for rational e > 0, rounded down to `places`.
Real power_of_two(const Rational& e, int places) {
  if (e <= 0) throw Error("extrapolation exponents must be positive");
  if (!e.get_num().fits_ulong_p() || !e.get_den().fits_ulong_p()) throw Error("extrapolation exponent too large");
  const unsigned long p = e.get_num().get_ui();
  const unsigned long q = e.get_den().get_ui();
  Integer x;
  mpz_ui_pow_ui(x.get_mpz_t(), 10, static_cast<unsigned long>(places) * q);
  x <<= p;
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), q);
  return Real(r, places);
}

}  // namespace

Extrapolation limit_extrapolate(const std::vector<Real>& samples, const Rational& first_exponent) {
  if (samples.empty()) throw Error("no samples to extrapolate");
  const int places = samples.front().places();
  const int n = static_cast<int>(samples.size());
  // col holds column m of the Richardson table; diag collects T[m][m].
  std::vector<Real> col = samples;
  std::vector<Real> diag{col[0]};
  for (int m = 1; m < n; ++m) {
    const Real f = power_of_two(first_exponent + (m - 1), places);
    const Real denom = f - Real::from_rational(1, places);
    std::vector<Real> next;
    for (int j = m; j < n; ++j) {
      next.push_back(col[j - m + 1] + (col[j - m + 1] - col[j - m]) / denom);
    }
    col = std::move(next);
    diag.push_back(col[0]);
  }
  Extrapolation out;
  out.levels = n;
  out.value = diag.back();
  if (n == 1) {
    out.error = Real::zero(places);
    out.converged = false;
    return out;
  }
  out.error = abs(diag[n - 1] - diag[n - 2]);
  if (n == 2) {
    out.converged = out.error.is_zero();
    return out;
  }
  const Real prev = abs(diag[n - 2] - diag[n - 3]);
  // Differences this small are rounding noise amplified by the table.
  const Real noise = Real::from_rational(pow(Rational(1, 10), static_cast<unsigned long>(std::max(places - 6, 0))), places);
  out.converged = out.error < noise || out.error < prev;
  return out;
}

Extrapolation limit_extrapolate(const std::function<Real(long)>& seq, long k0, int levels, const Rational& first_exponent,
                                const PrecisionContext& ctx) {
  ctx.validate();
  if (k0 < 1 || levels < 1) throw Error("extrapolation needs K0 >= 1 and at least one level");
  std::vector<Real> samples;
  for (int j = 0; j < levels; ++j) samples.push_back(seq(k0 << j).with_places(ctx.places()));
  return limit_extrapolate(samples, first_exponent);
}

namespace {

URatFunc ratio_of(const UPoly& num, const UPoly& den) { return URatFunc::make(num, den); }

const UPoly X = UPoly::x();

// arctan(1/x) = sum (-1)^n / ((2n+1) x^(2n+1)).
Real arctan_inverse(long x, const PrecisionContext& ctx) {
  const UPoly num = -1 * (2 * X + UPoly(1));
  const UPoly den = (2 * X + UPoly(3)) * Rational(x * x);
  return sum_hypergeometric(Rational(1, x), ratio_of(num, den), ctx).value;
}

Real pi_machin(const PrecisionContext& ctx) {
  Real v = arctan_inverse(5, ctx) * Rational(16);
  v -= arctan_inverse(239, ctx) * Rational(4);
  return v;
}

Real pi_gauss(const PrecisionContext& ctx) {
  Real v = arctan_inverse(18, ctx) * Rational(48);
  v += arctan_inverse(57, ctx) * Rational(32);
  v -= arctan_inverse(239, ctx) * Rational(20);
  return v;
}

// zeta(3) = 5/2 sum_{k>=1} (-1)^(k+1) / (k^3 binom(2k, k)), indexed from
// n = k - 1.
Real zeta3_binomial(const PrecisionContext& ctx) {
  const UPoly k = X + UPoly(1);
  const UPoly num = -1 * pow(k, 3);
  const UPoly den = 2 * pow(k + UPoly(1), 2) * (2 * k + UPoly(1));
  return sum_hypergeometric(Rational(1, 2), ratio_of(num, den), ctx).value * Rational(5, 2);
}

// zeta(3) = 1/64 sum (-1)^k (k!)^10 (205k^2 + 250k + 77) / ((2k+1)!)^5.
Real zeta3_amdeberhan(const PrecisionContext& ctx) {
  const UPoly p = UPoly(std::vector<Rational>{77, 250, 205});
  const UPoly num = -1 * pow(X + UPoly(1), 10) * p.shifted(1);
  const UPoly den = p * pow((2 * X + UPoly(2)) * (2 * X + UPoly(3)), 5);
  return sum_hypergeometric(Rational(77), ratio_of(num, den), ctx).value * Rational(1, 64);
}

// G = pi/8 log(2 + sqrt 3) + 3/8 sum 1 / ((2n+1)^2 binom(2n, n)), with
// log(2 + sqrt 3) = 2/sqrt(3) sum 3^-i / (2i + 1).
Real catalan_ramanujan(const PrecisionContext& ctx) {
  const int places = ctx.places();
  const Real s = sum_hypergeometric(1, ratio_of((X + UPoly(1)) * (2 * X + UPoly(1)), 2 * pow(2 * X + UPoly(3), 2)), ctx).value;
  const Real a = sum_hypergeometric(1, ratio_of(2 * X + UPoly(1), 3 * (2 * X + UPoly(3))), ctx).value;
  const Real sqrt3 = sqrt(Real::from_rational(3, places));
  const Real log_term = a * Rational(2) / sqrt3;
  Real v = pi_machin(ctx) * log_term * Rational(1, 8);
  v += s * Rational(3, 8);
  return v;
}

// G = 1/64 sum_{n>=1} (-1)^(n-1) 256^n (40n^2 - 24n + 3) (2n)!^3 (n!)^2
//     / (n^3 (2n-1) (4n)!^2).
Real catalan_lupas(const PrecisionContext& ctx) {
  const UPoly n = X + UPoly(1);
  const UPoly p = UPoly(std::vector<Rational>{3, -24, 40});
  const UPoly two_n = 2 * n;
  const UPoly four_n = 4 * n;
  const UPoly num = -256 * p.shifted(2) * pow((two_n + UPoly(1)) * (two_n + UPoly(2)), 3) *
                    pow(n + UPoly(1), 2) * pow(n, 3) * (two_n - UPoly(1));
  const UPoly den = p.shifted(1) * pow(n + UPoly(1), 3) * (two_n + UPoly(1)) *
                    pow((four_n + UPoly(1)) * (four_n + UPoly(2)) * (four_n + UPoly(3)) * (four_n + UPoly(4)), 2);
  // n = 1: 256 * 19 * 2^3 * 1 / (1 * 1 * 24^2)
  const Rational t1 = Rational(256 * 19 * 8, 576);
  return sum_hypergeometric(t1, ratio_of(num, den), ctx).value * Rational(1, 64);
}

std::mutex cache_mutex;
std::map<std::pair<std::string, int>, Real> cache;

}  // namespace

Real reference_constant(const std::string& name, const PrecisionContext& ctx) {
  ctx.validate();
  const auto key = std::make_pair(name, ctx.places());
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  PrecisionContext inner = ctx;
  inner.guard_digits += 5;
  inner.max_terms = std::max(ctx.max_terms, 100000L);
  Real v;
  if (name == "pi") {
    v = pi_machin(inner);
  } else if (name == "zeta3") {
    v = zeta3_binomial(inner);
  } else if (name == "catalan") {
    v = catalan_ramanujan(inner);
  } else {
    throw Error("unknown reference constant '" + name + "' (expected pi, zeta3 or catalan)");
  }
  v = v.with_places(ctx.places());
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, v);
  return v;
}

Real reference_constant_cross(const std::string& name, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionContext inner = ctx;
  inner.guard_digits += 5;
  inner.max_terms = std::max(ctx.max_terms, 100000L);
  Real v;
  if (name == "pi") {
    v = pi_gauss(inner);
  } else if (name == "zeta3") {
    v = zeta3_amdeberhan(inner);
  } else if (name == "catalan") {
    v = catalan_lupas(inner);
  } else {
    throw Error("unknown reference constant '" + name + "'");
  }
  return v.with_places(ctx.places());
}

std::string reference_formula(const std::string& name) {
  if (name == "pi") return "16 atan(1/5) - 4 atan(1/239)";
  if (name == "zeta3") return "5/2 sum (-1)^(k+1) / (k^3 binom(2k,k))";
  if (name == "catalan") return "pi/8 log(2+sqrt3) + 3/8 sum 1/((2n+1)^2 binom(2n,n))";
  throw Error("unknown reference constant '" + name + "'");
}

}  // namespace wz
