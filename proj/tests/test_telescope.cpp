#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wz/accelerate.hpp"
#include "wz/telescope.hpp"

using namespace wz;

namespace {

const BPoly n = BPoly::n();
const BPoly k = BPoly::k();
const UPoly x = UPoly::x();

UPoly lin(const Rational& a) { return UPoly::linear(a, 1); }

URatFunc minus_ratio(const Telescoper& t) { return URatFunc::make(-1 * t.coeffs[0], t.coeffs[1]); }

bool same(const URatFunc& a, const URatFunc& b) { return a.num == b.num && a.den == b.den; }

WZPair pair_of(const char* kind, const char* base, const char* pattern) {
  return build_wz_pair(parse_base(parse_kind(kind), base), parse_pattern(pattern));
}

Rational binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return Rational(r);
}

}  // namespace

TEST_CASE("gosper examples") {
  const auto geo = gosper(RationalFunction(2));
  REQUIRE(geo);
  CHECK(*geo == RationalFunction(1));

  // t = k k!, antidifference k! = (1/k) t.
  const RationalFunction r((k + BPoly(1)) * (k + BPoly(1)), k);
  const auto y = gosper(r);
  REQUIRE(y);
  CHECK(*y == RationalFunction(BPoly(1), k));
  CHECK(y->shift_k(1) * r - *y == RationalFunction(1));

  CHECK_FALSE(gosper(RationalFunction(k, k + BPoly(1))).has_value());
}

TEST_CASE("gosper is sound on random summable terms") {
  std::mt19937_64 rng(30);
  int tried = 0;
  while (tried < 30) {
    const RationalFunction r = testing::random_summable_ratio(rng);
    if (r.is_zero()) continue;
    ++tried;
    const auto y = gosper(r);
    REQUIRE(y);
    CHECK(y->shift_k(1) * r - *y == RationalFunction(1));
  }
}

TEST_CASE("zeilberger on binomial(n, k) gives the doubling recurrence") {
  const RationalFunction qn(n + BPoly(1), n - k + BPoly(1));
  const RationalFunction qk(n - k, k + BPoly(1));
  const Telescoper t = zeilberger(qn, qk, 3);
  CHECK(t.order == 1);
  CHECK(same(minus_ratio(t), URatFunc::make(UPoly(2), UPoly(1))));
  CHECK(certify(qn, qk, t));
  for (long m = 0; m <= 10; ++m) {
    Rational s = 0;
    for (long j = 0; j <= m + 1; ++j) s += t.coeffs[1](m) * binomial(m + 1, j) + t.coeffs[0](m) * binomial(m, j);
    CHECK(s == 0);
  }
}

TEST_CASE("telescoper of the first example term") {
  const HypergeometricTerm u = build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("3,0,1,2,2"));
  const Telescoper t = zeilberger(u, 3);
  REQUIRE(t.order == 1);
  CHECK(certify(u, t));
  const URatFunc expected = URatFunc::make(
      make_rational(-27, 16) * lin(make_rational(3, 2)) * lin(make_rational(3, 2)) * lin(make_rational(2, 3)) *
          lin(make_rational(4, 3)) * lin(make_rational(3, 4)) * lin(make_rational(5, 4)),
      lin(make_rational(1, 2)) * pow(lin(1), 5));
  CHECK(same(minus_ratio(t), expected));
  CHECK(t.coeffs[1].lc() > 0);
  // Integer coefficients with no common factor across the operator.
  const Rational c0 = content(t.coeffs[0]);
  const Rational c1 = content(t.coeffs[1]);
  REQUIRE(c0.get_den() == 1);
  REQUIRE(c1.get_den() == 1);
  CHECK(gcd(c0.get_num(), c1.get_num()) == 1);
}

TEST_CASE("weighted terms telescope with N - 1") {
  for (const auto& [kind, base, pattern] :
       {std::tuple{"omega", "3/2,1/2,1,1,1", "3,0,1,2,2"}, std::tuple{"omega", "1/2,1/2,1/2,1/2,1/2", "3,0,1,2,2"},
        std::tuple{"phi", "3/2,1,1,1", "3,0,2,2"}, std::tuple{"omega", "1/2,1/2,1/2,1/2,0", "3,1,1,1,3"}}) {
    const WZPair p = pair_of(kind, base, pattern);
    const Telescoper t = zeilberger(p.F, 3);
    CHECK(t.order == 1);
    CHECK(t.coeffs[0] == UPoly(-1));
    CHECK(t.coeffs[1] == UPoly(1));
    CHECK(certify(p.F, p.wz_telescoper()));
    CHECK(p.multiplier.constant == 1);
    Multiplier poch = p.multiplier;
    poch.poly = UPoly(1);
    CHECK(poch(0) == 1);
  }
}

TEST_CASE("certify rejects a perturbed certificate") {
  const WZPair p = pair_of("omega", "3/2,1/2,1,1,1", "3,0,1,2,2");
  Telescoper bad = p.wz_telescoper();
  bad.certificate = bad.certificate + RationalFunction(1);
  CHECK_FALSE(certify(p.F, bad));
}

TEST_CASE("certify is invariant under rescaling by a polynomial in n") {
  const WZPair p = pair_of("omega", "3/2,1/2,1,1,1", "3,0,1,2,2");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2; ++trial) {
    UPoly s;
    while (s.is_zero()) s = testing::random_upoly(rng, 2);
    for (const bool perturb : {false, true}) {
      Telescoper t = p.telescoper;
      if (perturb) t.certificate = t.certificate + RationalFunction(1);
      Telescoper scaled = t;
      for (UPoly& a : scaled.coeffs) a = a * s;
      scaled.certificate = t.certificate * RationalFunction(BPoly(s));
      CHECK(certify(p.U, scaled) == certify(p.U, t));
      CHECK(certify(p.U, t) == !perturb);
    }
  }
}

TEST_CASE("telescoping partial sums on a grid") {
  for (const auto& [kind, base, pattern] :
       {std::tuple{"omega", "3/2,1/2,1,1,1", "3,0,1,2,2"}, std::tuple{"omega", "1/2,1/2,1/2,1/2,1/2", "3,0,1,2,2"},
        std::tuple{"phi", "3/2,1,1,1", "3,0,2,2"}, std::tuple{"omega", "1/2,1/2,1/2,1/2,0", "3,1,1,1,3"}}) {
    const WZPair p = pair_of(kind, base, pattern);
    CHECK(telescoping_failures(p.F, p.G(), 6, 12, Exec::serial).empty());
  }
  // The order-1 telescoper of U itself, with general coefficients.
  const WZPair p = pair_of("omega", "3/2,1/2,1,1,1", "3,0,1,2,2");
  const HypergeometricTerm g = p.U.times(p.telescoper.certificate);
  for (long nn = 0; nn <= 6; ++nn) {
    Rational lhs = 0;
    for (long K = 1; K <= 12; ++K) {
      lhs += p.telescoper.coeffs[0](nn) * eval_exact(p.U, nn, K - 1) +
             p.telescoper.coeffs[1](nn) * eval_exact(p.U, nn + 1, K - 1);
      CHECK(lhs == eval_exact(g, nn, K) - eval_exact(g, nn, 0));
    }
  }
}

TEST_CASE("normalize_first_order examples") {
  SUBCASE("first example operator") {
    Telescoper t;
    t.order = 1;
    t.coeffs = {1728 * lin(make_rational(3, 2)) * lin(make_rational(3, 2)) * lin(make_rational(2, 3)) *
                    lin(make_rational(4, 3)) * lin(make_rational(3, 4)) * lin(make_rational(5, 4)),
                -1024 * lin(make_rational(1, 2)) * pow(lin(1), 5)};
    const Multiplier m = normalize_first_order(t);
    // c(n + 1) / c(n) = -a_1 / a_0.
    CHECK(m.z == make_rational(16, 27));
    std::vector<Rational> num = m.num_poch;
    std::vector<Rational> den = m.den_poch;
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    CHECK(num == std::vector<Rational>{make_rational(1, 2), 1, 1, 1, 1, 1});
    CHECK(den == std::vector<Rational>{make_rational(2, 3), make_rational(3, 4), make_rational(5, 4),
                                       make_rational(4, 3), make_rational(3, 2), make_rational(3, 2)});
    for (long j = 0; j <= 10; ++j) CHECK(m(j + 1) / m(j) == -t.coeffs[1](j) / t.coeffs[0](j));
  }
  SUBCASE("constant operator") {
    const Multiplier m = normalize_first_order({1, {UPoly(-2), UPoly(1)}, RationalFunction(0)});
    CHECK(m.z == make_rational(1, 2));
    CHECK(m.num_poch.empty());
    CHECK(m.den_poch.empty());
    CHECK(m(0) == 1);
  }
  SUBCASE("linear operator") {
    const Multiplier m = normalize_first_order({1, {-1 * lin(make_rational(1, 2)), lin(1)}, RationalFunction(0)});
    CHECK(m.z == 1);
    CHECK(m.num_poch == std::vector<Rational>{1});
    CHECK(m.den_poch == std::vector<Rational>{make_rational(1, 2)});
    for (long j = 0; j <= 10; ++j) CHECK(m(j + 1) / m(j) == Rational(j + 1) / (Rational(j) + make_rational(1, 2)));
  }
  SUBCASE("nonlinear factor is rejected") {
    CHECK_THROWS_AS(normalize_first_order({1, {x * x + UPoly(1), UPoly(1)}, RationalFunction(0)}), Error);
  }
}

TEST_CASE("telescoper and multiplier JSON") {
  const WZPair p = pair_of("omega", "3/2,1/2,1,1,1", "3,0,1,2,2");
  const nlohmann::json t = to_json(p.telescoper);
  CHECK(t["order"] == 1);
  CHECK(t["coeffs"].size() == 2);
  const nlohmann::json m = to_json(p.multiplier);
  CHECK(m["z"] == "-16/27");
  CHECK(m["const"] == "1");
}
