#include "wz/dougall.hpp"

#include <sstream>

#include "wz/kernels.hpp"

namespace wz {

std::vector<Rational> DougallBase::params() const {
  if (kind == SeriesKind::omega) return {a, b, c, d, e};
  return {a, b, c, d};
}

DougallBase DougallBase::from_params(SeriesKind kind, const std::vector<Rational>& p) {
  const std::size_t want = kind == SeriesKind::omega ? 5 : 4;
  if (p.size() != want) {
    throw Error(kind_name(kind) + " needs " + std::to_string(want) + " parameters, got " + std::to_string(p.size()));
  }
  DougallBase base{kind, p[0], p[1], p[2], p[3], want == 5 ? p[4] : Rational(0)};
  return base;
}

namespace {

void add_factor(std::vector<PochFactor>& out, const PochFactor& f) {
  for (PochFactor& g : out) {
    if (g.var == f.var && g.pos == f.pos && g.intercept == f.intercept && g.slope == f.slope) {
      g.mult += f.mult;
      return;
    }
  }
  out.push_back(f);
}

}  // namespace

HypergeometricTerm build_term(const DougallBase& base, const Pattern& pattern) {
  const std::vector<Rational> p = base.params();
  if (pattern.slopes.size() != p.size()) {
    throw Error("pattern length " + std::to_string(pattern.slopes.size()) + " does not match " + kind_name(base.kind));
  }
  for (int s : pattern.slopes) {
    if (s < 0) throw Error("pattern slopes must be nonnegative");
  }
  const Rational& a = p[0];
  const int sa = pattern.slopes[0];
  HypergeometricTerm t;
  t.alt_sign_k = base.kind == SeriesKind::phi;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int si = pattern.slopes[i];
    if (sa - si < 0) throw Error("negative derived slope " + std::to_string(sa - si) + " in parameter " + std::to_string(i + 1));
    add_factor(t.poch, {p[i], si, Var::k, Position::numerator, 1});
    add_factor(t.poch, {1 + a - p[i], sa - si, Var::k, Position::denominator, 1});
  }
  t.prefactor = RationalFunction(BPoly::linear(a, sa, 2));
  return t;
}

Rational convergence_margin(const DougallBase& base) {
  if (base.kind != SeriesKind::omega) throw Error("convergence_margin is defined for Omega only");
  return 1 + 2 * base.a - base.b - base.c - base.d - base.e;
}

namespace {

constexpr long kSlowK0 = 32;
constexpr int kSlowLevels = 12;
constexpr long kAverageTerms = 2000;
constexpr int kAverageDepth = 80;

int supported_digits(const Real& value, const Real& error, int cap) {
  if (error.is_zero()) return cap;
  return std::min(cap, agreeing_digits(value, value + error));
}

}  // namespace

SlowSum slow_sum_k(const HypergeometricTerm& t, long n, const PrecisionContext& ctx) {
  ctx.validate();
  const int places = ctx.places() + 8;
  const std::optional<Rational> lambda = k_exponent(t, n);
  SlowSum out;
  if (!lambda) {
    out.value = Real::from_rational(*terminating_k_sum(t, n), ctx.places());
    out.error = Real::zero(ctx.places());
    out.digits = ctx.digits;
    out.reliable = true;
    return out;
  }
  if (t.alt_sign_k) {
    if (*lambda >= 0) throw Error("alternating sum diverges: terms grow like k^" + to_string(*lambda));
    const long m = std::max(kAverageTerms, static_cast<long>(kAverageDepth) + 1);
    const std::vector<Real> s = partial_sums_k(t, n, m, places);
    std::vector<Real> row(s.end() - (kAverageDepth + 1), s.end());
    Real prev_spread = Real::zero(places);
    Real spread = Real::zero(places);
    for (int depth = 0; depth < kAverageDepth; ++depth) {
      prev_spread = spread;
      spread = abs(row[1] - row[0]);
      std::vector<Real> next;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back((row[i] + row[i + 1]) * Rational(1, 2));
      row = std::move(next);
    }
    out.value = row[0].with_places(ctx.places());
    out.error = (spread * Rational(1, 2)).with_places(ctx.places());
    out.reliable = spread < prev_spread || spread.is_zero();
  } else {
    const Rational tail_exponent = -(*lambda + 1);
    if (tail_exponent <= 0) throw Error("sum diverges: terms decay like k^" + to_string(*lambda));
    const long kmax = kSlowK0 << (kSlowLevels - 1);
    const std::vector<Real> s = partial_sums_k(t, n, kmax, places);
    std::vector<Real> samples;
    for (int j = 0; j < kSlowLevels; ++j) samples.push_back(s[kSlowK0 << j]);
    const Extrapolation e = limit_extrapolate(samples, tail_exponent);
    out.value = e.value.with_places(ctx.places());
    out.error = e.error.with_places(ctx.places());
    out.reliable = e.converged;
  }
  out.digits = supported_digits(out.value, out.error, ctx.digits);
  return out;
}

SlowSum slow_sum_estimate(const DougallBase& base, const PrecisionContext& ctx) {
  if (base.kind == SeriesKind::omega) {
    const Rational m = convergence_margin(base);
    if (m <= 0) {
      throw Error("Omega(" + to_string(base) + ") is not defined: convergence margin " + to_string(m) + " <= 0");
    }
  }
  Pattern flat;
  flat.slopes.assign(base.params().size(), 0);
  return slow_sum_k(build_term(base, flat), 0, ctx);
}

std::string kind_name(SeriesKind kind) { return kind == SeriesKind::omega ? "omega" : "phi"; }

SeriesKind parse_kind(const std::string& s) {
  if (s == "omega") return SeriesKind::omega;
  if (s == "phi") return SeriesKind::phi;
  throw Error("unknown series kind '" + s + "' (expected omega or phi)");
}

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

DougallBase parse_base(SeriesKind kind, const std::string& csv) {
  std::vector<Rational> p;
  for (const std::string& s : split_csv(csv)) p.push_back(parse_rational(s));
  return DougallBase::from_params(kind, p);
}

Pattern parse_pattern(const std::string& csv) {
  Pattern p;
  for (const std::string& s : split_csv(csv)) {
    const Rational q = parse_rational(s);
    if (!is_integer(q) || q < 0 || !q.get_num().fits_sint_p()) throw Error("pattern entry '" + s + "' is not a nonnegative integer");
    p.slopes.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return p;
}

std::string to_string(const DougallBase& base) {
  std::string out;
  for (const Rational& q : base.params()) out += (out.empty() ? "" : ",") + to_string(q);
  return out;
}

std::string to_string(const Pattern& p) {
  std::string out;
  for (int s : p.slopes) out += (out.empty() ? "" : ",") + std::to_string(s);
  return out;
}

}  // namespace wz
