#include "wz/telescope.hpp"

#include <algorithm>
#include <map>

#include "wz/algebra.hpp"

namespace wz {

namespace {

// r = a(k) / b(k) * c(k + 1) / c(k) with gcd(a(k), b(k + j)) free of k for
// every j >= 0.
struct GosperForm {
  BPoly a;
  BPoly b;
  BPoly c{1};
};

GosperForm gosper_form(const RationalFunction& r) {
  GosperForm f{r.num(), r.den()};
  for (int j : dispersion_set(f.b, f.a)) {
    for (;;) {
      const BPoly g = poly_gcd(f.a, f.b.shift_k(j));
      if (g.deg_k() < 1) break;
      f.a = exact_div(f.a, g);
      f.b = exact_div(f.b, g.shift_k(-j));
      for (int i = 1; i <= j; ++i) f.c = f.c * g.shift_k(-i);
    }
  }
  return f;
}

// Upper bound for deg_k x in a(k) x(k + 1) - b(k - 1) x(k) = c(k), with
// deg_c an upper bound for deg_k c; -1 when only x = 0 is possible.
int degree_bound(const BPoly& a, const BPoly& bm1, int deg_c) {
  const BPoly s = a + bm1;
  const BPoly d = a - bm1;
  const int ds = s.deg_k();
  const int dd = d.deg_k();
  if (dd >= ds) return deg_c - dd;
  int bound = deg_c - ds + 1;
  if (dd == ds - 1) {
    // The leading coefficients cancel when deg x = -2 [k^(L-1)] d / lc(s).
    const RationalFunction cand(BPoly(d.coeff_k(dd)) * Rational(-2), BPoly(s.coeff_k(ds)));
    if (cand.is_polynomial() && cand.num().is_constant()) {
      const Rational v = cand(0, 0);
      if (is_integer(v) && v >= 0 && v.get_num().fits_sint_p()) bound = std::max(bound, static_cast<int>(v.get_num().get_si()));
    }
  }
  return std::max(bound, -1);
}

struct ParamSolution {
  std::vector<UPoly> a;  // coefficients of the P_i
  RationalFunction y;    // G = y * (sum a_i P_i) * H, H the term with ratio rbar
};

// Parameterized Gosper: find a_i(n), not all zero, such that
// sum_i a_i P_i(k) H(k) has a hypergeometric antidifference, where
// H(k + 1) / H(k) = rbar. Returns the antidifference as y * H.
std::optional<ParamSolution> parameterized_gosper(const RationalFunction& rbar, const std::vector<BPoly>& p) {
  const GosperForm gf = gosper_form(rbar);
  const BPoly bm1 = gf.b.shift_k(-1);
  int deg_p = -1;
  for (const BPoly& q : p) deg_p = std::max(deg_p, q.deg_k());
  const int deg_c = deg_p + gf.c.deg_k();
  const int bound = degree_bound(gf.a, bm1, deg_c);
  const std::size_t nx = static_cast<std::size_t>(bound + 1);
  const std::size_t cols = nx + p.size();

  std::vector<BPoly> col(cols);
  const BPoly k = BPoly::k();
  for (std::size_t m = 0; m < nx; ++m) {
    const int e = static_cast<int>(m);
    col[m] = gf.a * pow(k + BPoly(1), e) - bm1 * pow(k, e);
  }
  for (std::size_t i = 0; i < p.size(); ++i) col[nx + i] = -(gf.c * p[i]);
  int rows = 0;
  for (const BPoly& c : col) rows = std::max(rows, c.deg_k() + 1);
  std::vector<std::vector<UPoly>> mat(static_cast<std::size_t>(rows), std::vector<UPoly>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (int r = 0; r <= col[j].deg_k(); ++r) mat[static_cast<std::size_t>(r)][j] = col[j].coeff_k(r);
  }

  const auto basis = nullspace(std::move(mat), cols);
  const std::vector<UPoly>* best = nullptr;
  int best_deg = 0;
  std::string best_key;
  for (const auto& v : basis) {
    bool has_a = false;
    int total = 0;
    std::string key;
    for (std::size_t i = nx; i < cols; ++i) {
      has_a = has_a || !v[i].is_zero();
      total += std::max(v[i].degree(), 0);
      key += v[i].to_string('n') + ";";
    }
    if (!has_a) continue;
    if (!best || total < best_deg || (total == best_deg && key < best_key)) {
      best = &v;
      best_deg = total;
      best_key = key;
    }
  }
  if (!best) return std::nullopt;
  const std::vector<UPoly>& v = *best;
  ParamSolution sol;
  sol.a.assign(v.begin() + static_cast<std::ptrdiff_t>(nx), v.end());
  std::vector<UPoly> xs(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nx));
  const BPoly x = nx ? BPoly(std::move(xs)) : BPoly();
  // G = b(k - 1) x(k) / c(k) * (sum a_i P_i) H with c = c_gf * sum a_i P_i.
  sol.y = x.is_zero() ? RationalFunction() : RationalFunction(bm1 * x, gf.c);
  return sol;
}

}  // namespace

std::optional<RationalFunction> gosper(const RationalFunction& r) {
  if (r.is_zero()) throw Error("gosper: zero ratio");
  if (!r.free_of_n()) throw Error("gosper: ratio must be a rational function of k only");
  const auto sol = parameterized_gosper(r, {BPoly(1)});
  if (!sol) return std::nullopt;
  // a_0 t = G(k + 1) - G(k) with G = y t, so the antidifference of t is y / a_0.
  return sol->y * RationalFunction(BPoly(sol->a[0])).inverse();
}

namespace {

// Q_i = prod_{j < i} q_n(n + j, k) for i = 0..order.
std::vector<RationalFunction> shift_products(const RationalFunction& q_n, int order) {
  std::vector<RationalFunction> out{RationalFunction(1)};
  for (int i = 1; i <= order; ++i) out.push_back(out.back() * q_n.shift_n(i - 1));
  return out;
}

// Scales a coefficient tuple to coprime integer coefficients with no common
// polynomial factor and a positive leading coefficient of the last entry.
// Returns the factor applied.
RationalFunction normalize_tuple(std::vector<UPoly>& a) {
  const UPoly g = gcd_all(a);
  std::vector<Rational> coeffs;
  for (UPoly& p : a) {
    if (p.is_zero()) continue;
    p = exact_div(p, g);
    coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  }
  Integer num_gcd = 0;
  for (const Rational& c : coeffs) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  Rational s = make_rational(common_denominator(coeffs), num_gcd);
  if (a.back().lc() < 0) s = -s;
  for (UPoly& p : a) p *= s;
  return RationalFunction(BPoly(UPoly(s)), BPoly(g));
}

}  // namespace

Telescoper zeilberger(const RationalFunction& q_n, const RationalFunction& q_k, int max_order) {
  if (max_order < 1) throw Error("zeilberger: max_order must be at least 1");
  for (int order = 1; order <= max_order; ++order) {
    const auto qs = shift_products(q_n, order);
    BPoly l(1);
    for (const auto& q : qs) l = poly_lcm(l, q.den());
    std::vector<BPoly> p;
    for (const auto& q : qs) p.push_back(q.num() * exact_div(l, q.den()));
    const RationalFunction rbar = q_k * RationalFunction(l, l.shift_k(1));
    auto sol = parameterized_gosper(rbar, p);
    if (!sol) continue;
    Telescoper t;
    t.order = order;
    t.coeffs = std::move(sol->a);
    const RationalFunction scale = normalize_tuple(t.coeffs);
    // sum a_i F(n + i, k) = (sum a_i P_i / L) F, so G = y / L * F.
    t.certificate = sol->y * RationalFunction(BPoly(1), l) * scale;
    return t;
  }
  throw Error("no telescoper up to max_order " + std::to_string(max_order));
}

Telescoper zeilberger(const HypergeometricTerm& t, int max_order) {
  return zeilberger(shift_quotient(t, Var::n), shift_quotient(t, Var::k), max_order);
}

bool certify(const RationalFunction& q_n, const RationalFunction& q_k, const Telescoper& tel) {
  if (tel.order < 1 || tel.coeffs.size() != static_cast<std::size_t>(tel.order) + 1) return false;
  const auto qs = shift_products(q_n, tel.order);
  RationalFunction lhs;
  for (int i = 0; i <= tel.order; ++i) {
    lhs += RationalFunction(BPoly(tel.coeffs[static_cast<std::size_t>(i)])) * qs[static_cast<std::size_t>(i)];
  }
  const RationalFunction& r = tel.certificate;
  return lhs - (r.shift_k(1) * q_k - r) == RationalFunction();
}

bool certify(const HypergeometricTerm& t, const Telescoper& tel) {
  return certify(shift_quotient(t, Var::n), shift_quotient(t, Var::k), tel);
}

Rational Multiplier::operator()(long n) const {
  Rational v = constant * poly(n) * pow(z, static_cast<unsigned long>(n));
  for (const Rational& a : num_poch) v *= pochhammer(a, n);
  for (const Rational& b : den_poch) v /= pochhammer(b, n);
  return v;
}

URatFunc Multiplier::ratio() const {
  UPoly num = poly.shifted(1) * z;
  UPoly den = poly;
  for (const Rational& a : num_poch) num *= UPoly::linear(a, 1);
  for (const Rational& b : den_poch) den *= UPoly::linear(b, 1);
  return URatFunc::make(num, den);
}

HypergeometricTerm Multiplier::apply(const HypergeometricTerm& t) const {
  HypergeometricTerm out = t;
  out.constant *= constant;
  out.z *= z;
  auto add = [&](const Rational& base, Position pos) {
    for (PochFactor& f : out.poch) {
      if (f.var == Var::n && f.pos == pos && f.intercept == base) {
        ++f.mult;
        return;
      }
    }
    out.poch.push_back({base, 0, Var::n, pos, 1});
  };
  for (const Rational& a : num_poch) add(a, Position::numerator);
  for (const Rational& b : den_poch) add(b, Position::denominator);
  if (poly != UPoly(1)) out.prefactor *= RationalFunction(BPoly(poly));
  return out;
}

Multiplier normalize_first_order(const Telescoper& tel) {
  if (tel.order != 1) throw Error("normalize_first_order needs an order-1 telescoper");
  const UPoly& a0 = tel.coeffs[0];
  const UPoly& a1 = tel.coeffs[1];
  if (a0.is_zero() || a1.is_zero()) throw Error("normalize_first_order: vanishing telescoper coefficient");
  const RootFactorization f1 = rational_roots(a1);
  const RootFactorization f0 = rational_roots(a0);
  if (f1.residual.degree() > 0) throw Error("nonlinear irreducible factor " + f1.residual.to_string('n'));
  if (f0.residual.degree() > 0) throw Error("nonlinear irreducible factor " + f0.residual.to_string('n'));

  // a_1 = l1 prod (n + alpha), a_0 = l0 prod (n + beta); c(n+1)/c(n) = -a_1/a_0.
  std::map<Rational, int> bases;  // +mult for numerator, -mult for denominator
  for (const auto& [r, m] : f1.roots) bases[-r] += m;
  for (const auto& [r, m] : f0.roots) bases[-r] -= m;
  Multiplier c;
  c.z = -f1.residual.lc() / f0.residual.lc();
  for (const auto& [base, m] : bases) {
    if (m == 0) continue;
    if (base > 0) {
      for (int i = 0; i < std::abs(m); ++i) (m > 0 ? c.num_poch : c.den_poch).push_back(base);
      continue;
    }
    if (m > 0 || !is_integer(base)) {
      throw Error("normalize_first_order: Pochhammer base " + to_string(base) + " gives a pole or zero along n >= 0");
    }
    // 1 / (-j)_n has poles; n (n - 1) ... (n - j) / (1)_n has ratio 1 / (n - j).
    for (int i = 0; i < -m; ++i) {
      for (Integer j = 0; j <= -base; ++j) c.poly *= UPoly::linear(Rational(-j), 1);
      c.den_poch.push_back(1);
    }
  }
  std::sort(c.num_poch.begin(), c.num_poch.end());
  std::sort(c.den_poch.begin(), c.den_poch.end());
  std::vector<Rational> num;
  std::vector<Rational> den;
  std::set_difference(c.num_poch.begin(), c.num_poch.end(), c.den_poch.begin(), c.den_poch.end(), std::back_inserter(num));
  std::set_difference(c.den_poch.begin(), c.den_poch.end(), c.num_poch.begin(), c.num_poch.end(), std::back_inserter(den));
  c.num_poch = std::move(num);
  c.den_poch = std::move(den);
  return c;
}

nlohmann::json to_json(const Telescoper& t) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const UPoly& a : t.coeffs) coeffs.push_back(a.to_string('n'));
  return {{"order", t.order}, {"coeffs", coeffs}, {"certificate", t.certificate.to_string()}};
}

nlohmann::json to_json(const Multiplier& m) {
  nlohmann::json num = nlohmann::json::array();
  nlohmann::json den = nlohmann::json::array();
  for (const Rational& a : m.num_poch) num.push_back(to_string(a));
  for (const Rational& b : m.den_poch) den.push_back(to_string(b));
  return {{"z", to_string(m.z)},
          {"num_poch", num},
          {"den_poch", den},
          {"const", to_string(m.constant)},
          {"poly", m.poly.to_string('n')}};
}

}  // namespace wz
