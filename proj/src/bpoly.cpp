#include "wz/bpoly.hpp"

#include <algorithm>
#include <sstream>

namespace wz {

namespace {
const UPoly kZeroPoly;
}

BPoly::BPoly(const UPoly& in_n) {
  if (!in_n.is_zero()) c_.push_back(in_n);
}

BPoly::BPoly(std::vector<UPoly> in_k) : c_(std::move(in_k)) { trim(); }

BPoly BPoly::in_k(const UPoly& p) {
  std::vector<UPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return BPoly(std::move(v));
}

BPoly BPoly::linear(const Rational& c0, const Rational& cn, const Rational& ck) {
  return BPoly(std::vector<UPoly>{UPoly::linear(c0, cn), UPoly(ck)});
}

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BPoly::deg_n() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

bool BPoly::is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }

bool BPoly::free_of_n() const {
  return std::all_of(c_.begin(), c_.end(), [](const UPoly& c) { return c.is_constant(); });
}

const UPoly& BPoly::coeff_k(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[static_cast<std::size_t>(j)];
}

Rational BPoly::coeff(int i_n, int j_k) const { return coeff_k(j_k).coeff(i_n); }

std::pair<int, int> BPoly::leading_exponent() const {
  std::pair<int, int> best{-1, -1};
  int best_total = -1;
  for (int j = 0; j < static_cast<int>(c_.size()); ++j) {
    const int i = c_[static_cast<std::size_t>(j)].degree();
    if (i < 0) continue;
    if (i + j > best_total || (i + j == best_total && i > best.first)) {
      best = {i, j};
      best_total = i + j;
    }
  }
  return best;
}

Rational BPoly::leading_coefficient() const {
  auto [i, j] = leading_exponent();
  if (j < 0) return 0;
  return coeff(i, j);
}

Rational BPoly::operator()(const Rational& n, const Rational& k) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= k;
    acc += (*it)(n);
  }
  return acc;
}

UPoly BPoly::at_n(const Rational& n0) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c(n0));
  return UPoly(std::move(v));
}

UPoly BPoly::at_k(const Rational& k0) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= k0;
    acc += *it;
  }
  return acc;
}

BPoly BPoly::shift_k(const Rational& c) const {
  if (c == 0 || c_.size() <= 1) return *this;
  std::vector<UPoly> r = c_;
  const int d = deg_k();
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) r[static_cast<std::size_t>(j)] += c * r[static_cast<std::size_t>(j) + 1];
  }
  return BPoly(std::move(r));
}

BPoly BPoly::shift_n(const Rational& c) const {
  if (c == 0) return *this;
  std::vector<UPoly> r;
  r.reserve(c_.size());
  for (const auto& p : c_) r.push_back(p.shifted(c));
  return BPoly(std::move(r));
}

BPoly& BPoly::operator+=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& p : c_) p *= s;
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<UPoly> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BPoly(std::move(r));
}

BPoly operator*(const UPoly& in_n, const BPoly& a) {
  std::vector<UPoly> r;
  r.reserve(a.c_.size());
  for (const auto& p : a.c_) r.push_back(in_n * p);
  return BPoly(std::move(r));
}

BPoly operator-(BPoly a) {
  for (auto& p : a.c_) p = -p;
  return a;
}

std::string BPoly::to_string() const {
  if (c_.empty()) return "0";
  struct Term {
    int i, j;
    Rational c;
  };
  std::vector<Term> terms;
  for (int j = 0; j < static_cast<int>(c_.size()); ++j) {
    const auto& p = c_[static_cast<std::size_t>(j)];
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coeff(i) != 0) terms.push_back({i, j, p.coeff(i)});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    if (x.i + x.j != y.i + y.j) return x.i + x.j > y.i + y.j;
    return x.i > y.i;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = abs(t.c);
    if (first) {
      if (t.c < 0) os << "-";
    } else {
      os << (t.c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto append = [&mono](char var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append('n', t.i);
    append('k', t.j);
    if (mono.empty()) {
      os << wz::to_string(mag);
    } else {
      if (mag != 1) os << wz::to_string(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

BPoly pow(const BPoly& p, int e) {
  BPoly r(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

UPoly content_k(const BPoly& p) {
  UPoly g;
  for (const auto& c : p.k_coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) return UPoly(1);
  }
  return g.is_zero() ? UPoly(1) : g;
}

BPoly exact_div(const BPoly& a, const UPoly& in_n) {
  std::vector<UPoly> r;
  r.reserve(a.k_coeffs().size());
  for (const auto& c : a.k_coeffs()) r.push_back(exact_div(c, in_n));
  return BPoly(std::move(r));
}

BPoly primitive_k(const BPoly& p) {
  UPoly c = content_k(p);
  if (c.degree() <= 0) return p;
  return exact_div(p, c);
}

std::pair<BPoly, Rational> normalize(const BPoly& p) {
  if (p.is_zero()) return {p, Rational(1)};
  std::vector<Rational> all;
  for (const auto& c : p.k_coeffs()) all.insert(all.end(), c.coeffs().begin(), c.coeffs().end());
  Integer l = common_denominator(all);
  Integer g = 0;
  for (const auto& c : all) {
    if (c == 0) continue;
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s = make_rational(g, l);
  if (p.leading_coefficient() < 0) s = -s;
  return {p * Rational(1 / s), s};
}

std::optional<BPoly> try_exact_div(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw Error("bivariate division by zero");
  if (a.is_zero()) return BPoly();
  const int db = b.deg_k();
  if (a.deg_k() < db) return std::nullopt;
  std::vector<UPoly> r = a.k_coeffs();
  std::vector<UPoly> q(static_cast<std::size_t>(a.deg_k() - db + 1));
  const UPoly& lb = b.coeff_k(db);
  for (int i = a.deg_k(); i >= db; --i) {
    const UPoly& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    auto [f, rem] = divmod(top, lb);
    if (!rem.is_zero()) return std::nullopt;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff_k(j);
  }
  for (int j = 0; j < db; ++j) {
    if (!r[static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
  }
  return BPoly(std::move(q));
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error("exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return *q;
}

}  // namespace wz
