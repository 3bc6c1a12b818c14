#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term or rational function was evaluated at a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Makes a canonical rational from numerator and denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p" (optional sign, surrounding blanks ignored).
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Least common multiple of the denominators of all values in `range`.
template <typename Range>
Integer common_denominator(const Range& range) {
  Integer l = 1;
  for (const Rational& q : range) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

/// Rising factorial (x)_m for a nonnegative integer m.
Rational pochhammer(const Rational& x, long m);

}  // namespace wz
