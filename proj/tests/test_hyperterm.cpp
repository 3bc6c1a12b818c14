#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wz/dougall.hpp"
#include "wz/hyperterm.hpp"

using namespace wz;

namespace {

const BPoly n = BPoly::n();
const BPoly k = BPoly::k();

HypergeometricTerm example42_u() {
  return build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("3,0,1,2,2"));
}

HypergeometricTerm single(const Rational& intercept, int slope, Var var, Position pos) {
  HypergeometricTerm t;
  t.poch.push_back({intercept, slope, var, pos, 1});
  return t;
}

}  // namespace

TEST_CASE("shift quotients of simple terms") {
  const HypergeometricTerm half = single(make_rational(1, 2), 0, Var::k, Position::numerator);
  CHECK(shift_quotient(half, Var::k) == RationalFunction(k + BPoly(make_rational(1, 2))));
  CHECK(shift_quotient(half, Var::n) == RationalFunction(1));

  HypergeometricTerm geo;
  geo.z = make_rational(-16, 27);
  CHECK(shift_quotient(geo, Var::n) == RationalFunction(make_rational(-16, 27)));

  HypergeometricTerm alt;
  alt.alt_sign_k = true;
  CHECK(shift_quotient(alt, Var::k) == RationalFunction(-1));

  // (1 + 2n)_k: shifting n by one moves the base by 2.
  const HypergeometricTerm moving = single(1, 2, Var::k, Position::numerator);
  const RationalFunction expected((k + 2 * n + BPoly(1)) * (k + 2 * n + BPoly(2)),
                                  (2 * n + BPoly(1)) * (2 * n + BPoly(2)));
  CHECK(shift_quotient(moving, Var::n) == expected);
}

TEST_CASE("k-quotient of the first example term matches exact values") {
  const HypergeometricTerm u = example42_u();
  const RationalFunction qk = shift_quotient(u, Var::k);
  CHECK(qk(0, 1) == eval_exact(u, 0, 2) / eval_exact(u, 0, 1));
}

TEST_CASE("eval_exact examples") {
  const HypergeometricTerm a = build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("0,0,0,0,0"));
  CHECK(eval_exact(a, 0, 0) == make_rational(3, 2));
  CHECK(eval_exact(a, 0, 1) == make_rational(7, 27));

  const HypergeometricTerm u53 = build_term(parse_base(SeriesKind::omega, "1/2,1/2,1/2,1/2,0"), parse_pattern("3,1,1,1,3"));
  CHECK(eval_exact(u53, 0, 0) == make_rational(1, 2));
  for (long kk = 1; kk <= 5; ++kk) CHECK(eval_exact(u53, 0, kk) == 0);
  CHECK(eval_exact(u53, 1, 1) != 0);
}

TEST_CASE("eval_exact reports poles") {
  const HypergeometricTerm t = single(-2, 0, Var::k, Position::denominator);
  CHECK(eval_exact(t, 0, 2) == make_rational(1, 2));  // 1 / ((-2)(-1))
  CHECK_THROWS_AS(eval_exact(t, 0, 3), PoleError);
}

TEST_CASE("eval_float rounds the exact value once") {
  const HypergeometricTerm a = build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern("0,0,0,0,0"));
  CHECK(eval_float(a, 0, 1, 30).to_fixed(30) == "0.259259259259259259259259259259");
  HypergeometricTerm zero;
  zero.constant = 0;
  CHECK(eval_float(zero, 3, 4, 30).is_zero());
  HypergeometricTerm c;
  c.constant = make_rational(9, 64);
  CHECK(eval_float(c, 0, 0, 30).to_fixed(6) == "0.140625");
}

TEST_CASE("quotients of fixture and random terms are compatible") {
  std::mt19937_64 rng(7);
  for (const char* pattern : {"3,0,1,2,2", "3,1,1,1,3", "0,0,0,0,0"}) {
    CHECK(testing::quotients_compatible(
        build_term(parse_base(SeriesKind::omega, "3/2,1/2,1,1,1"), parse_pattern(pattern))));
  }
  CHECK(testing::quotients_compatible(build_term(parse_base(SeriesKind::phi, "3/2,1,1,1"), parse_pattern("3,0,2,2"))));
  for (int i = 0; i < 20; ++i) {
    const auto [base, pattern] = testing::random_admissible(rng);
    CHECK(testing::quotients_compatible(build_term(base, pattern)));
  }
}

TEST_CASE("n-quotient agrees with exact value ratios") {
  const HypergeometricTerm u = example42_u();
  const RationalFunction qn = shift_quotient(u, Var::n);
  for (long nn = 0; nn <= 8; ++nn) {
    for (long kk = 0; kk <= 8; ++kk) {
      const Rational v = eval_exact(u, nn, kk);
      if (v == 0) continue;
      CHECK(eval_exact(u, nn + 1, kk) / v == qn(nn, kk));
    }
  }
}

TEST_CASE("Pochhammer recurrence on random bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational x = testing::random_rational(rng) + make_rational(1, 7);
    const HypergeometricTerm t = single(x, 0, Var::k, Position::numerator);
    for (long kk = 0; kk < 20; ++kk) CHECK(eval_exact(t, 0, kk + 1) == eval_exact(t, 0, kk) * (x + kk));
  }
}

TEST_CASE("zero-intercept regularization keeps values") {
  const HypergeometricTerm u53 = build_term(parse_base(SeriesKind::omega, "1/2,1/2,1/2,1/2,0"), parse_pattern("3,1,1,1,3"));
  const HypergeometricTerm r = regularize_zero_intercepts(u53);
  for (long nn = 0; nn <= 4; ++nn) {
    for (long kk = 0; kk <= 4; ++kk) CHECK(eval_exact(r, nn, kk) == eval_exact(u53, nn, kk));
  }
}

TEST_CASE("limit at a half-integer k") {
  // (1)_k / (1/2)_k = Gamma(1 + k) Gamma(1/2) / Gamma(1/2 + k).
  HypergeometricTerm s = single(1, 0, Var::k, Position::numerator);
  s.poch.push_back({make_rational(1, 2), 0, Var::k, Position::denominator, 1});
  const PiMonomial at_half = limit_at_half_integer(s, 0, make_rational(1, 2));
  CHECK(at_half.coeff == make_rational(1, 2));
  CHECK(at_half.half_pi_power == 2);
  CHECK(limit_at_half_integer(s, 0, make_rational(-1, 2)).coeff == 0);
  CHECK(limit_at_half_integer(s, 0, 2).coeff == make_rational(8, 3));
}

TEST_CASE("term JSON layout") {
  const nlohmann::json j = to_json(example42_u());
  CHECK(j["z"] == "1");
  CHECK(j["alt_sign_k"] == false);
  CHECK(!j["poch"].empty());
  CHECK(j["poch"][0].contains("base"));
  CHECK(j["poch"][0]["var"] == "k");
}
