#include "wz/kernels.hpp"

#include <exception>

namespace wz {

namespace {

// Polynomial times a common denominator, for fast evaluation at integers.
struct IntPoly {
  std::vector<Integer> c;

  IntPoly(const UPoly& p, const Integer& scale) {
    for (const Rational& q : p.coeffs()) c.push_back(Integer(q * scale));
  }
  bool is_zero() const { return c.empty(); }
  Integer operator()(long x) const {
    Integer v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      v *= x;
      v += *it;
    }
    return v;
  }
};

Integer div_round(const Integer& a, const Integer& b) {
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) >= abs(b)) q += sgn(a) * sgn(b);
  return q;
}

// num / den of a univariate quotient, both scaled to integer coefficients
// by the same factor.
struct StepQuotient {
  IntPoly num;
  IntPoly den;
};

StepQuotient integer_form(const URatFunc& u) {
  std::vector<Rational> all = u.num.coeffs();
  all.insert(all.end(), u.den.coeffs().begin(), u.den.coeffs().end());
  const Integer l = common_denominator(all);
  return {IntPoly(u.num, l), IntPoly(u.den, l)};
}

StepQuotient at_n(const RationalFunction& q, long n) {
  return integer_form(URatFunc::make(q.num().at_n(n), q.den().at_n(n)));
}

int decimal_length(long v) { return static_cast<int>(std::to_string(v).size()); }

Rational pow10_inverse(int places) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return Rational(Integer(1), p);
}

template <class Body>
void run_loop(long count, Exec exec, Body body) {
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

Real step_in_k(const HypergeometricTerm& t, long n, long K, int places) {
  if (K < 0 || n < 0) throw Error("step_in_k needs n, K >= 0");
  Real v = Real::from_rational(eval_exact(t, n, 0), places);
  if (K == 0) return v;
  const StepQuotient q = at_n(shift_quotient(t, Var::k), n);
  Integer s = v.scaled();
  for (long k = 0; k < K; ++k) {
    const Integer a = q.num(k);
    const Integer b = q.den(k);
    if (a == 0 || b == 0) {
      s = Real::from_rational(eval_exact(t, n, k + 1), places).scaled();
    } else {
      s = div_round(s * a, b);
    }
  }
  return Real(s, places);
}

std::vector<Real> partial_sums_k(const HypergeometricTerm& t, long n, long count, int places) {
  std::vector<Real> out{Real::zero(places)};
  if (count <= 0) return out;
  const StepQuotient q = at_n(shift_quotient(t, Var::k), n);
  Integer s = Real::from_rational(eval_exact(t, n, 0), places).scaled();
  Integer acc = 0;
  for (long k = 0; k < count; ++k) {
    acc += s;
    out.emplace_back(acc, places);
    const Integer a = q.num(k);
    const Integer b = q.den(k);
    if (a == 0 || b == 0) {
      s = Real::from_rational(eval_exact(t, n, k + 1), places).scaled();
    } else {
      s = div_round(s * a, b);
    }
  }
  return out;
}

Real sum_over_n(const HypergeometricTerm& t, long K, const PrecisionContext& ctx) {
  ctx.validate();
  const int places = ctx.places() + decimal_length(K) + 2;
  const RationalFunction qn = shift_quotient(t, Var::n);
  const UPoly qn_den = qn.den().at_k(K);
  if (qn_den.is_zero()) throw PoleError("n-quotient undefined at k = " + std::to_string(K));
  const URatFunc ratio = URatFunc::make(qn.num().at_k(K), qn_den);
  const StepQuotient qi = integer_form(ratio);
  const IntPoly& num = qi.num;
  const IntPoly& den = qi.den;
  const Rational tol = pow10_inverse(ctx.places());

  Real v = step_in_k(t, 0, K, places);
  Real total = Real::zero(places);
  if (ratio.is_zero()) return (total += v).with_places(ctx.places());
  const RatioBound rb = geometric_ratio_bound(ratio);
  const Rational factor = rb.rho / (1 - rb.rho);
  // The budget counts from the point where the tail bound starts to apply.
  for (long n = 0; n < rb.start + ctx.max_terms; ++n) {
    total += v;
    if (n >= rb.start && abs(v.to_rational()) * factor < tol) return total.with_places(ctx.places());
    const Integer a = num(n);
    const Integer b = den(n);
    if (a == 0 || b == 0 || v.is_zero()) {
      v = step_in_k(t, n + 1, K, places);
    } else {
      v = Real(div_round(v.scaled() * a, b), places);
    }
  }
  throw Error("sum over n at k = " + std::to_string(K) + " did not reach its tail bound within " +
              std::to_string(ctx.max_terms) + " terms");
}

std::vector<Real> sums_over_n(const HypergeometricTerm& t, const std::vector<long>& ks, const PrecisionContext& ctx,
                              Exec exec) {
  std::vector<Real> out(ks.size());
  run_loop(static_cast<long>(ks.size()), exec, [&](long i) { out[i] = sum_over_n(t, ks[i], ctx); });
  return out;
}

std::optional<Rational> k_exponent(const HypergeometricTerm& term, long n) {
  // (3n)_k at n = 0 is a limit, not a zero; make the vanishing factor explicit.
  const HypergeometricTerm t = regularize_zero_intercepts(term);
  Rational lambda = 0;
  int count = 0;
  for (const PochFactor& f : t.poch) {
    if (f.var != Var::k) continue;
    const Rational b = f.intercept + f.slope * n;
    const bool nonpositive_integer = is_integer(b) && b <= 0;
    if (f.pos == Position::numerator) {
      if (nonpositive_integer) return std::nullopt;
      lambda += f.mult * b;
      count += f.mult;
    } else {
      if (nonpositive_integer) throw PoleError("denominator (" + base_string(f) + ")_k has a pole");
      lambda -= f.mult * b;
      count -= f.mult;
    }
  }
  if (count != 0) throw Error("term grows or decays factorially in k");
  const UPoly pn = t.prefactor.num().at_n(n);
  const UPoly pd = t.prefactor.den().at_n(n);
  if (pn.is_zero() || t.constant == 0) return std::nullopt;
  if (pd.is_zero()) throw PoleError("prefactor denominator vanishes identically at n = " + std::to_string(n));
  return lambda + (pn.degree() - pd.degree());
}

std::optional<Rational> terminating_k_sum(const HypergeometricTerm& term, long n) {
  const HypergeometricTerm t = regularize_zero_intercepts(term);
  for (const PochFactor& f : t.poch) {
    const Rational b = f.intercept + f.slope * n;
    if (f.var == Var::k && f.pos == Position::denominator && is_integer(b) && b <= 0) return std::nullopt;
  }
  if (t.constant == 0 || t.prefactor.num().at_n(n).is_zero()) return Rational(0);
  std::optional<long> last;
  for (const PochFactor& f : t.poch) {
    if (f.var != Var::k || f.pos != Position::numerator) continue;
    const Rational b = f.intercept + f.slope * n;
    if (is_integer(b) && b <= 0) {
      const long m = -b.get_num().get_si();
      if (!last || m < *last) last = m;
    }
  }
  if (!last) return std::nullopt;
  Rational sum = 0;
  for (long k = 0; k <= *last; ++k) sum += eval_exact(t, n, k);
  return sum;
}

std::vector<std::pair<long, long>> telescoping_failures(const HypergeometricTerm& F, const HypergeometricTerm& G,
                                                        long n_max, long k_max, Exec exec) {
  std::vector<std::vector<std::pair<long, long>>> per_n(n_max + 1);
  run_loop(n_max + 1, exec, [&](long n) {
    Rational lhs = 0;
    const Rational g0 = eval_exact(G, n, 0);
    for (long K = 1; K <= k_max; ++K) {
      lhs += eval_exact(F, n + 1, K - 1) - eval_exact(F, n, K - 1);
      if (lhs != eval_exact(G, n, K) - g0) per_n[n].emplace_back(n, K);
    }
  });
  std::vector<std::pair<long, long>> out;
  for (const auto& v : per_n) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace wz
