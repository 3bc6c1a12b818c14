#include <algorithm>

#include "doctest.h"
#include "wz/dougall.hpp"

using namespace wz;

namespace {

std::vector<Rational> bases(const HypergeometricTerm& t, Position pos, long n) {
  std::vector<Rational> out;
  for (const PochFactor& f : t.poch) {
    if (f.var != Var::k || f.pos != pos) continue;
    for (int i = 0; i < f.mult; ++i) out.push_back(f.intercept + f.slope * n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Real pi_squared_over_8(const PrecisionContext& ctx) {
  const Real pi = reference_constant("pi", ctx);
  return pi * pi * make_rational(1, 8);
}

}  // namespace

TEST_CASE("build_term for the first example") {
  const HypergeometricTerm u = build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("3,0,1,2,2"));
  // At n = 1 the denominator bases are 2 + 3n, 3/2 + 2n and 3/2 + n twice.
  CHECK(bases(u, Position::denominator, 1) ==
        std::vector<Rational>{make_rational(5, 2), make_rational(5, 2), make_rational(7, 2), 5});
  CHECK(bases(u, Position::numerator, 1) == std::vector<Rational>{make_rational(1, 2), 2, 3, 3});
  CHECK(u.prefactor == RationalFunction(BPoly::linear(make_rational(3, 2), 3, 2)));
  CHECK_FALSE(u.alt_sign_k);
}

TEST_CASE("build_term for the alternating kind") {
  const HypergeometricTerm b = build_term(parse_base(SeriesKind::phi, "3/2,1,1,1"), parse_pattern("3,0,2,2"));
  CHECK(b.alt_sign_k);
  CHECK(eval_exact(b, 0, 0) == make_rational(3, 2));
  // B(3/2,1,1,1,1) = -(7/2) (1)^3 / ((3/2)(3/2)(3/2)).
  CHECK(eval_exact(b, 0, 1) == make_rational(-28, 27));
}

TEST_CASE("zero pattern gives an n-free term") {
  const HypergeometricTerm t = build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("0,0,0,0,0"));
  CHECK(shift_quotient(t, Var::n) == RationalFunction(1));
}

TEST_CASE("build_term input errors") {
  const DougallBase b = parse_base(SeriesKind::omega, "3/2,1/2,1,1,1");
  CHECK_THROWS_AS(build_term(b, parse_pattern("1,0,2,0,0")), Error);
  CHECK_THROWS_AS(build_term(b, parse_pattern("3,0,1,2")), Error);
  CHECK_THROWS_AS(parse_base(SeriesKind::phi, "1,2,3,4,5"), Error);
}

TEST_CASE("convergence margins") {
  CHECK(convergence_margin(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1")) == make_rational(1, 2));
  CHECK(convergence_margin(parse_base(SeriesKind::omega, "1/2,1/2,1/2,1/2,1/2")) == 0);
  CHECK(convergence_margin(parse_base(SeriesKind::omega, "7/2,1/2,3/2,5/2,5/2")) == 1);
}

TEST_CASE("build_term is symmetric in the interchangeable parameters") {
  const std::vector<Rational> p = {make_rational(5, 2), make_rational(1, 3), 1, make_rational(3, 4), make_rational(1, 2)};
  const std::vector<int> s = {3, 0, 1, 2, 2};
  std::vector<int> order = {1, 2, 3, 4};
  const HypergeometricTerm ref = build_term(DougallBase::from_params(SeriesKind::omega, p), Pattern{s});
  const Rational margin = convergence_margin(DougallBase::from_params(SeriesKind::omega, p));
  int perms = 0;
  while (std::next_permutation(order.begin(), order.end())) {
    std::vector<Rational> q = {p[0]};
    std::vector<int> t = {s[0]};
    for (int i : order) {
      q.push_back(p[static_cast<std::size_t>(i)]);
      t.push_back(s[static_cast<std::size_t>(i)]);
    }
    const DougallBase b = DougallBase::from_params(SeriesKind::omega, q);
    const HypergeometricTerm u = build_term(b, Pattern{t});
    CHECK(convergence_margin(b) == margin);
    bool same = true;
    for (long n = 0; n <= 6; ++n) {
      for (long k = 0; k <= 6; ++k) same = same && eval_exact(u, n, k) == eval_exact(ref, n, k);
    }
    CHECK(same);
    ++perms;
  }
  CHECK(perms == 23);
}

TEST_CASE("slow sums") {
  PrecisionContext ctx;
  ctx.digits = 20;
  SUBCASE("Omega(3/2,1/2,1,1,1) = 7 zeta(3) / 4") {
    const SlowSum s = slow_sum_estimate(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), ctx);
    const Real target = reference_constant("zeta3", ctx) * make_rational(7, 4);
    CHECK(s.reliable);
    CHECK(s.digits >= 3);
    CHECK(agreeing_digits(s.value, target) >= std::min(s.digits, 15));
  }
  SUBCASE("Phi(3/2,1/2,1,1) = pi^2 / 8") {
    const SlowSum s = slow_sum_estimate(parse_base(SeriesKind::phi, "3/2,1/2,1,1"), ctx);
    CHECK(s.reliable);
    CHECK(agreeing_digits(s.value, pi_squared_over_8(ctx)) >= 15);
  }
  SUBCASE("Phi(3/2,1,1,1) = Catalan") {
    const SlowSum s = slow_sum_estimate(parse_base(SeriesKind::phi, "3/2,1,1,1"), ctx);
    CHECK(agreeing_digits(s.value, reference_constant("catalan", ctx)) >= 15);
  }
  SUBCASE("margin 0 is refused") {
    CHECK_THROWS_AS(slow_sum_estimate(parse_base(SeriesKind::omega, "1/2,1/2,1/2,1/2,1/2"), ctx), Error);
  }
}

TEST_CASE("parsing and printing") {
  CHECK(parse_kind("phi") == SeriesKind::phi);
  CHECK_THROWS_AS(parse_kind("psi"), Error);
  CHECK(to_string(parse_base(SeriesKind::omega, "3/2, 1/2,1,1,1")) == "3/2,1/2,1,1,1");
  CHECK(to_string(parse_pattern("3,0,1,2,2")) == "3,0,1,2,2");
}
