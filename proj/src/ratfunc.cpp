#include "wz/ratfunc.hpp"

#include "wz/algebra.hpp"

namespace wz {

RationalFunction::RationalFunction(const BPoly& num, const BPoly& den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = BPoly(1);
    return;
  }
  const BPoly g = poly_gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
  }
  normalize_sign();
}

void RationalFunction::normalize_sign() {
  auto [d, s] = normalize(den_);
  den_ = std::move(d);
  num_ *= Rational(1 / s);
}

RationalFunction rf_simplify(const BPoly& num, const BPoly& den) { return {num, den}; }

Rational RationalFunction::operator()(const Rational& n, const Rational& k) const {
  const Rational d = den_(n, k);
  if (d == 0) {
    throw PoleError("pole of " + to_string() + " at (n, k) = (" + wz::to_string(n) + ", " + wz::to_string(k) + ")");
  }
  return num_(n, k) / d;
}

Rational RationalFunction::limit_along_n(const Rational& n, const Rational& k) const {
  const Rational d = den_(n, k);
  if (d != 0) return num_(n, k) / d;
  UPoly pn = num_.at_k(k);
  UPoly pd = den_.at_k(k);
  if (pd.is_zero()) {
    throw PoleError("denominator of " + to_string() + " vanishes identically at k = " + wz::to_string(k));
  }
  const UPoly g = gcd(pn, pd);
  pn = exact_div(pn, g);
  pd = exact_div(pd, g);
  const Rational dv = pd(n);
  if (dv == 0) {
    throw PoleError("pole of " + to_string() + " at (n, k) = (" + wz::to_string(n) + ", " + wz::to_string(k) + ")");
  }
  return pn(n) / dv;
}

RationalFunction RationalFunction::shift_k(const Rational& c) const {
  RationalFunction r(num_.shift_k(c), den_.shift_k(c), Reduced{});
  r.normalize_sign();
  return r;
}

RationalFunction RationalFunction::shift_n(const Rational& c) const {
  RationalFunction r(num_.shift_n(c), den_.shift_n(c), Reduced{});
  r.normalize_sign();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw Error("inverse of the zero rational function");
  RationalFunction r(den_, num_, Reduced{});
  r.normalize_sign();
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
  const BPoly g = poly_gcd(den_, o.den_);
  const BPoly da = exact_div(den_, g);
  const BPoly db = exact_div(o.den_, g);
  return *this = RationalFunction(num_ * db + o.num_ * da, da * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  const BPoly g1 = poly_gcd(num_, o.den_);
  const BPoly g2 = poly_gcd(o.num_, den_);
  BPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  BPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  RationalFunction r(std::move(n), std::move(d), Reduced{});
  r.normalize_sign();
  return *this = std::move(r);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

URatFunc URatFunc::make(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw Error("univariate rational function with zero denominator");
  if (num.is_zero()) return {};
  const UPoly g = gcd(num, den);
  UPoly n = exact_div(num, g);
  UPoly d = exact_div(den, g);
  const Rational l = d.lc();
  return {n * Rational(1 / l), d * Rational(1 / l)};
}

Rational URatFunc::operator()(const Rational& x) const {
  const Rational d = den(x);
  if (d == 0) throw PoleError("pole at " + wz::to_string(x));
  return num(x) / d;
}

}  // namespace wz
