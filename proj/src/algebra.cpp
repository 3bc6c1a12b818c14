#include "wz/algebra.hpp"

#include <algorithm>
#include <set>

namespace wz {

namespace {

// Pseudo-remainder of a by b as polynomials in k, up to a factor in Q[n].
BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const int db = b.deg_k();
  const BPoly lb(b.coeff_k(db));
  while (!a.is_zero() && a.deg_k() >= db) {
    const int shift = a.deg_k() - db;
    std::vector<UPoly> mono(static_cast<std::size_t>(shift) + 1);
    mono.back() = a.coeff_k(a.deg_k());
    a = lb * a - BPoly(std::move(mono)) * b;
  }
  return a;
}

}  // namespace

BPoly poly_gcd(const BPoly& p, const BPoly& q) {
  if (p.is_zero()) return normalize(q).first;
  if (q.is_zero()) return normalize(p).first;
  const UPoly c = gcd(content_k(p), content_k(q));
  BPoly a = primitive_k(p);
  BPoly b = primitive_k(q);
  if (a.deg_k() < b.deg_k()) std::swap(a, b);
  while (!b.is_zero() && b.deg_k() > 0) {
    BPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_k(r);
  }
  // b == 0: a is the primitive gcd. Otherwise b is a nonzero element of
  // Q[n] that is primitive in k, so the primitive parts are coprime.
  BPoly g = b.is_zero() ? primitive_k(normalize(a).first) : BPoly(1);
  return normalize(c * g).first;
}

BPoly poly_lcm(const BPoly& p, const BPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return normalize(exact_div(p, poly_gcd(p, q)) * q).first;
}

std::vector<Rational> RootFactorization::flat() const {
  std::vector<Rational> out;
  for (const auto& [r, m] : roots) out.insert(out.end(), static_cast<std::size_t>(m), r);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int sg = sgn(s(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign intact.
    r = -r;
    seq.push_back(r * (1 / abs(content(r))));
  }
  return seq;
}

class RootIsolator {
 public:
  explicit RootIsolator(const UPoly& squarefree)
      : p_(squarefree), sturm_(sturm_sequence(squarefree)), lc_(squarefree.lc()) {}

  std::set<Rational> run() {
    Rational bound = 0;
    for (int i = 0; i < p_.degree(); ++i) bound = std::max(bound, Rational(abs(p_.coeff(i) / p_.lc())));
    bound += 1;
    isolate(-bound, bound, count(-bound, bound), 0);
    return found_;
  }

 private:
  int count(const Rational& lo, const Rational& hi) const {
    return sign_changes(sturm_, lo) - sign_changes(sturm_, hi);
  }

  // Invariant: p(lo) != 0, p(hi) != 0, n roots lie in (lo, hi).
  void isolate(const Rational& lo, const Rational& hi, int n, int depth) {
    if (n <= 0) return;
    if (n == 1) {
      refine(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (p_(mid) == 0) {
      found_.insert(mid);
      // Move the split point off the root, staying strictly inside.
      Rational step = (hi - lo) / 4;
      do {
        step /= 2;
      } while (p_(mid + step) == 0 || count(mid, mid + step) != 0);
      mid += step;
    }
    if (depth > 4000) throw Error("rational_roots: root isolation did not terminate");
    isolate(lo, mid, count(lo, mid), depth + 1);
    isolate(mid, hi, count(mid, hi), depth + 1);
  }

  // A rational root r = u/v in lowest terms has v | lc, so r * lc is an
  // integer. Narrow the interval below width 1/(2 lc) and test the single
  // candidate.
  void refine(Rational lo, Rational hi) {
    const Rational target = 1 / (2 * abs(lc_));
    int slo = sgn(p_(lo));
    while (hi - lo >= target) {
      Rational mid = (lo + hi) / 2;
      const int sm = sgn(p_(mid));
      if (sm == 0) {
        found_.insert(mid);
        return;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const Rational scale = abs(lc_);
    Rational lo_scaled = lo * scale;
    Integer m;
    mpz_cdiv_q(m.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
    if (Rational(m) <= hi * scale) {
      Rational cand = make_rational(m, scale.get_num());
      if (p_(cand) == 0) found_.insert(cand);
    }
  }

  UPoly p_;
  std::vector<UPoly> sturm_;
  Rational lc_;
  std::set<Rational> found_;
};

}  // namespace

RootFactorization rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
  RootFactorization out;
  UPoly rest = p;
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    std::vector<Rational> v(rest.coeffs().begin() + 1, rest.coeffs().end());
    rest = UPoly(std::move(v));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
  if (rest.degree() >= 1) {
    UPoly prim = primitive(rest);
    UPoly sq = primitive(exact_div(prim, gcd(prim, prim.derivative())));
    std::set<Rational> found;
    if (sq.degree() == 1) {
      found.insert(-sq.coeff(0) / sq.coeff(1));
    } else if (sq.degree() > 1) {
      found = RootIsolator(sq).run();
    }
    for (const Rational& r : found) {
      const UPoly lin = UPoly::linear(-r, 1);
      int m = 0;
      for (;;) {
        auto [q, rem] = divmod(rest, lin);
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++m;
      }
      out.roots.emplace_back(r, m);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rest;
  return out;
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t size = m.size();
  if (size == 0) return UPoly(1);
  UPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return UPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  UPoly det = m[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

UPoly shifted_resultant(const UPoly& a, const UPoly& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da < 0 || db < 0) return UPoly();
  if (da == 0) return UPoly(pow(a.lc(), static_cast<unsigned long>(db)));
  // Coefficients of b(x + j) in x, each a polynomial in j.
  std::vector<UPoly> bs(static_cast<std::size_t>(db) + 1);
  for (int i = 0; i <= db; ++i) {
    if (b.coeff(i) == 0) continue;
    // (x + j)^i = sum_m C(i, m) x^m j^(i - m)
    Integer binom = 1;
    for (int m = 0; m <= i; ++m) {
      if (m > 0) binom = binom * (i - m + 1) / m;
      bs[static_cast<std::size_t>(m)] += UPoly::monomial(b.coeff(i) * Rational(binom), i - m);
    }
  }
  if (db == 0) return UPoly(pow(bs[0].lc(), static_cast<unsigned long>(da)));
  const std::size_t size = static_cast<std::size_t>(da + db);
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - i)] = UPoly(a.coeff(i));
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) {
      syl[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - i)] = bs[static_cast<std::size_t>(i)];
    }
  }
  return bareiss_determinant(std::move(syl));
}

std::vector<int> dispersion_set(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error("dispersion_set of a zero polynomial");
  std::set<int> out;
  if (a.degree() < 1 || b.degree() < 1) return {};
  const RootFactorization fa = rational_roots(a);
  const RootFactorization fb = rational_roots(b);
  // a(k + j) and b(k) share the root k = beta when alpha = beta + j.
  for (const auto& [alpha, ma] : fa.roots) {
    for (const auto& [beta, mb] : fb.roots) {
      Rational j = alpha - beta;
      if (is_integer(j) && j >= 0 && j.get_num().fits_sint_p()) out.insert(static_cast<int>(j.get_num().get_si()));
    }
  }
  // Irrational roots can only be shared between the residual factors.
  if (fa.residual.degree() >= 2 && fb.residual.degree() >= 2) {
    UPoly res = shifted_resultant(fb.residual, fa.residual);
    if (res.is_zero()) throw Error("dispersion_set: identically vanishing resultant");
    for (const auto& [j, m] : rational_roots(res).roots) {
      if (is_integer(j) && j >= 0 && j.get_num().fits_sint_p()) out.insert(static_cast<int>(j.get_num().get_si()));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> dispersion_set(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error("dispersion_set of a zero polynomial");
  if (a.deg_k() < 1 || b.deg_k() < 1) return {};
  if (a.free_of_n() && b.free_of_n()) return dispersion_set(a.at_n(0), b.at_n(0));
  // Any generic shift survives specialization of n (at points where the
  // leading coefficients in k do not vanish), so two specializations give
  // a candidate superset that is then checked over Q(n).
  static const Rational kPoints[] = {make_rational(7919, 13), make_rational(1223, 17),
                                     make_rational(-5077, 19), make_rational(3571, 23),
                                     make_rational(911, 29), make_rational(-2203, 31)};
  std::vector<std::set<int>> candidates;
  for (const Rational& n0 : kPoints) {
    if (a.coeff_k(a.deg_k())(n0) == 0 || b.coeff_k(b.deg_k())(n0) == 0) continue;
    auto js = dispersion_set(a.at_n(n0), b.at_n(n0));
    candidates.emplace_back(js.begin(), js.end());
    if (candidates.size() == 2) break;
  }
  if (candidates.empty()) throw Error("dispersion_set: no admissible specialization point");
  std::vector<int> out;
  for (int j : candidates.front()) {
    if (candidates.size() > 1 && !candidates[1].count(j)) continue;
    if (poly_gcd(a.shift_k(j), b).deg_k() > 0) out.push_back(j);
  }
  return out;
}

}  // namespace wz

namespace wz {

UPoly gcd_all(const std::vector<UPoly>& v) {
  UPoly g;
  for (const UPoly& p : v) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g.is_zero() ? UPoly(1) : g;
}

namespace {

// Divides v by the gcd of its entries and clears rational content so the
// entries have coprime integer coefficients.
void make_primitive(std::vector<UPoly>& v) {
  const UPoly g = gcd_all(v);
  std::vector<Rational> coeffs;
  for (UPoly& p : v) {
    if (p.is_zero()) continue;
    if (g.degree() > 0) p = exact_div(p, g);
    coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  }
  if (coeffs.empty()) return;
  Integer num_gcd = 0;
  for (const Rational& c : coeffs) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  const Rational scale = make_rational(common_denominator(coeffs), num_gcd);
  for (UPoly& p : v) p *= scale;
}

}  // namespace

std::vector<std::vector<UPoly>> nullspace(std::vector<std::vector<UPoly>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < m.size(); ++j) {
    // Lowest-degree pivot limits coefficient growth.
    std::size_t best = m.size();
    for (std::size_t i = rank; i < m.size(); ++i) {
      if (m[i][j].is_zero()) continue;
      if (best == m.size() || m[i][j].degree() < m[best][j].degree()) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[rank], m[best]);
    make_primitive(m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][j].is_zero()) continue;
      const UPoly f = m[i][j];
      const UPoly p = m[rank][j];
      for (std::size_t c = 0; c < cols; ++c) m[i][c] = p * m[i][c] - f * m[rank][c];
      make_primitive(m[i]);
    }
    pivot_col.push_back(j);
    ++rank;
  }
  std::vector<std::vector<UPoly>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    // x_f = l, x_{p_i} = -m[i][f] l / m[i][p_i]
    UPoly l(1);
    for (std::size_t i = 0; i < rank; ++i) {
      if (!m[i][f].is_zero()) l = exact_div(l * m[i][pivot_col[i]], gcd(l, m[i][pivot_col[i]]));
    }
    std::vector<UPoly> v(cols);
    v[f] = l;
    for (std::size_t i = 0; i < rank; ++i) {
      if (m[i][f].is_zero()) continue;
      v[pivot_col[i]] = -(m[i][f] * exact_div(l, m[i][pivot_col[i]]));
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wz
