#pragma once

#include <utility>
#include <vector>

#include "wz/bpoly.hpp"
#include "wz/upoly.hpp"

namespace wz {

/// Greatest common divisor in Q[n, k], computed by a primitive PRS with k
/// as the main variable over Q[n]. The result has coprime integer
/// coefficients and a positive leading coefficient (graded lex, n > k).
/// gcd(0, 0) is 0.
BPoly poly_gcd(const BPoly& p, const BPoly& q);
BPoly poly_lcm(const BPoly& p, const BPoly& q);

/// Rational roots of p with multiplicity, plus the cofactor that has no
/// rational roots: p = residual * prod (x - r)^m.
struct RootFactorization {
  std::vector<std::pair<Rational, int>> roots;
  UPoly residual;

  /// Roots repeated according to multiplicity, in increasing order.
  std::vector<Rational> flat() const;
  /// True when p splits into linear factors over Q.
  bool splits() const { return residual.degree() <= 0; }
};

RootFactorization rational_roots(const UPoly& p);

/// Determinant of a square matrix over Q[x] by fraction-free (Bareiss)
/// elimination.
UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m);

/// Res_x(a(x), b(x + j)) as a polynomial in j.
UPoly shifted_resultant(const UPoly& a, const UPoly& b);

/// All j >= 0 such that a(k + j) and b(k) have a common nonconstant
/// factor, in increasing order.
std::vector<int> dispersion_set(const UPoly& a, const UPoly& b);

/// Dispersion over Q(n): all integers j >= 0 with deg_k gcd(a(n,k+j),
/// b(n,k)) > 0, where j does not depend on n.
std::vector<int> dispersion_set(const BPoly& a, const BPoly& b);

/// Basis of the right nullspace over Q(x) of a matrix with entries in
/// Q[x]. Each basis vector has polynomial entries with no common factor;
/// there is one vector per non-pivot column, in column order.
std::vector<std::vector<UPoly>> nullspace(std::vector<std::vector<UPoly>> m, std::size_t cols);

/// Monic gcd of all entries (1 when all are zero).
UPoly gcd_all(const std::vector<UPoly>& v);

}  // namespace wz
