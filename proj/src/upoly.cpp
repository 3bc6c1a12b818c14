#include "wz/upoly.hpp"

#include <sstream>

namespace wz {

namespace {
const Rational kZero = 0;
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly UPoly::linear(const Rational& c0, const Rational& c1) { return UPoly({c0, c1}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& UPoly::lc() const { return c_.empty() ? kZero : c_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::shifted(const Rational& c) const {
  if (c == 0 || c_.size() <= 1) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<Rational> r = c_;
  const int d = degree();
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) r[static_cast<std::size_t>(j)] += c * r[static_cast<std::size_t>(j) + 1];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled_arg(const Rational& s) const {
  std::vector<Rational> r = c_;
  Rational p = 1;
  for (auto& v : r) {
    v *= p;
    p *= s;
  }
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  Rational inv = 1 / c_.back();
  return *this * inv;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << wz::to_string(mag);
      continue;
    }
    if (mag != 1) os << wz::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const Rational inv = 1 / b.lc();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = primitive(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational content(const UPoly& p) {
  if (p.is_zero()) return 1;
  Integer l = common_denominator(p.coeffs());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational c = make_rational(g, l);
  return p.lc() < 0 ? Rational(-c) : c;
}

UPoly primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / content(p));
}

UPoly pow(const UPoly& p, int e) {
  UPoly r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace wz
