#include "doctest.h"
#include "wz/accelerate.hpp"
#include "wz/kernels.hpp"

using namespace wz;

namespace {

WZPair pair_of(SeriesKind kind, const char* base, const char* pattern) {
  return build_wz_pair(parse_base(kind, base), parse_pattern(pattern));
}

PrecisionContext at(int digits) {
  PrecisionContext c;
  c.digits = digits;
  return c;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree exactly") {
  const WZPair p = pair_of(SeriesKind::omega, "3/2,1/2,1,1,1", "3,0,1,2,2");
  const PrecisionContext ctx = at(30);
  const std::vector<long> ks = {0, 1, 5, 50, 100, 200, 400};
  const std::vector<Real> s = sums_over_n(p.G(), ks, ctx, Exec::serial);
  const std::vector<Real> q = sums_over_n(p.G(), ks, ctx, Exec::parallel);
  REQUIRE(s.size() == ks.size());
  REQUIRE(q.size() == ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) CHECK(s[i].to_rational() == q[i].to_rational());

  // A broken G must fail at the same points both ways.
  const HypergeometricTerm bad = p.F.times(p.R + RationalFunction(1));
  const auto fs = telescoping_failures(p.F, bad, 5, 8, Exec::serial);
  CHECK(!fs.empty());
  CHECK(fs == telescoping_failures(p.F, bad, 5, 8, Exec::parallel));
}

TEST_CASE("step_in_k follows the exact values") {
  const WZPair p = pair_of(SeriesKind::phi, "3/2,1,1,1", "3,0,2,2");
  for (long n = 0; n <= 3; ++n) {
    for (long K : {0L, 1L, 7L, 30L}) {
      CHECK(agreeing_digits(step_in_k(p.F, n, K, 40), eval_float(p.F, n, K, 40)) >= 35);
    }
  }
}

TEST_CASE("partial sums in k") {
  const WZPair p = pair_of(SeriesKind::omega, "3/2,1/2,1,1,1", "3,0,1,2,2");
  const std::vector<Real> s = partial_sums_k(p.F, 1, 10, 40);
  REQUIRE(s.size() == 11);
  CHECK(s[0].is_zero());
  Rational exact = 0;
  for (long K = 1; K <= 10; ++K) {
    exact += eval_exact(p.F, 1, K - 1);
    CHECK(agreeing_digits(s[static_cast<std::size_t>(K)], Real::from_rational(exact, 40)) >= 35);
  }
}

TEST_CASE("k exponents") {
  const WZPair p42 = pair_of(SeriesKind::omega, "3/2,1/2,1,1,1", "3,0,1,2,2");
  const auto e = k_exponent(p42.U, 0);
  REQUIRE(e);
  CHECK(*e == -2);
  // t(0, 2K) / t(0, K) tends to 2^lambda.
  const Rational ratio = eval_exact(p42.U, 0, 4000) / eval_exact(p42.U, 0, 2000);
  CHECK(abs(ratio - make_rational(1, 4)) < make_rational(1, 1000));

  const WZPair p53 = pair_of(SeriesKind::omega, "1/2,1/2,1/2,1/2,0", "3,1,1,1,3");
  CHECK(k_exponent(p53.G(), 0).has_value());
  CHECK(k_exponent(p53.G(), 1).has_value());
}

TEST_CASE("terminating k sums") {
  const WZPair p45 = pair_of(SeriesKind::omega, "1/2,1/2,1/2,1/2,1/2", "3,0,1,2,2");
  const auto s = terminating_k_sum(p45.F, 0);
  REQUIRE(s);
  CHECK(*s == 0);
  const WZPair p42 = pair_of(SeriesKind::omega, "3/2,1/2,1,1,1", "3,0,1,2,2");
  CHECK_FALSE(terminating_k_sum(p42.F, 0).has_value());
}

TEST_CASE("sum over n at fixed k") {
  const WZPair p = pair_of(SeriesKind::omega, "3/2,1/2,1,1,1", "3,0,1,2,2");
  const PrecisionContext ctx = at(30);
  const Real v = sum_over_n(p.G(), 0, ctx);
  CHECK(agreeing_digits(v, series_value(boundary_series(p), ctx).value) >= 30);
}
