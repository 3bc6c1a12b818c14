#include "wz/real.hpp"

#include <cmath>

namespace wz {

namespace {

Integer pow10(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// round(a / b) for b > 0, ties away from zero.
Integer div_round(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer twice = 2 * abs(r);
  if (twice >= abs(b)) q += (sgn(a) * sgn(b) >= 0) ? 1 : -1;
  return q;
}

}  // namespace

Integer round_nearest(const Rational& q) { return div_round(q.get_num(), q.get_den()); }

Real Real::from_rational(const Rational& q, int places) {
  return Real(div_round(q.get_num() * pow10(places), q.get_den()), places);
}

Rational Real::ulp() const { return make_rational(Integer(1), pow10(places_)); }

Rational Real::to_rational() const { return make_rational(v_, pow10(places_)); }

double Real::to_double() const { return to_rational().get_d(); }

Real Real::with_places(int places) const {
  if (places == places_) return *this;
  if (places > places_) return Real(v_ * pow10(places - places_), places);
  return Real(div_round(v_, pow10(places_ - places)), places);
}

void Real::require_same(const Real& o) const {
  if (o.places_ != places_) throw Error("Real: mixed precision operands");
}

Real& Real::operator+=(const Real& o) {
  require_same(o);
  v_ += o.v_;
  return *this;
}

Real& Real::operator-=(const Real& o) {
  require_same(o);
  v_ -= o.v_;
  return *this;
}

Real& Real::operator*=(const Real& o) {
  require_same(o);
  v_ = div_round(v_ * o.v_, pow10(places_));
  return *this;
}

Real& Real::operator/=(const Real& o) {
  require_same(o);
  if (o.v_ == 0) throw Error("Real: division by zero");
  Integer num = v_ * pow10(places_);
  Integer den = o.v_;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  v_ = div_round(num, den);
  return *this;
}

Real& Real::operator*=(const Rational& q) {
  Integer num = v_ * q.get_num();
  v_ = div_round(num, q.get_den());
  return *this;
}

bool operator<(const Real& a, const Real& b) {
  a.require_same(b);
  return a.v_ < b.v_;
}

std::string Real::to_fixed(int digits) const {
  const Integer m = abs(with_places(digits).v_);
  std::string s = m.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = (with_places(digits).v_ < 0) ? "-" : "";
  out += s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return out;
}

std::string Real::to_string(int digits) const {
  const Integer m = with_places(digits).v_;
  const std::string tail = " (" + std::to_string(digits) + " digits)";
  if (m == 0) return "0.0e0" + tail;
  const std::string s = Integer(abs(m)).get_str();
  const int exp = static_cast<int>(s.size()) - 1 - digits;
  std::string out = m < 0 ? "-" : "";
  out += s.substr(0, 1) + "." + (s.size() > 1 ? s.substr(1) : "0");
  return out + "e" + std::to_string(exp) + tail;
}

Real abs(Real x) { return x.sign() < 0 ? -x : x; }

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw Error("Real: square root of a negative number");
  // sqrt(v 10^-p) = sqrt(v 10^p) 10^-p; two extra digits give correct rounding.
  Integer s = x.scaled() * pow10(x.places() + 4);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return Real(div_round(r, 100), x.places());
}

int agreeing_digits(const Real& a, const Real& b) {
  const int p = std::min(a.places(), b.places());
  const Integer d = abs(a.with_places(p).scaled() - b.with_places(p).scaled());
  if (d == 0) return p;
  // 10^(len-1) <= d < 10^len, so |a - b| < 10^-(p - len) is the sharpest power.
  const int len = static_cast<int>(d.get_str().size());
  return std::max(p - len, 0);
}

}  // namespace wz
