#include "wz/rational.hpp"

#include <cctype>

namespace wz {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error("malformed rational: '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error("malformed rational: '" + std::string(s) + "'");
  }
  Integer z(std::string(s.substr(i)), 10);
  return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(trim(text.substr(0, slash)));
  Integer den = parse_integer(trim(text.substr(slash + 1)));
  return make_rational(num, den);
}

Rational pochhammer(const Rational& x, long m) {
  if (m < 0) throw Error("pochhammer: negative length");
  Rational r = 1;
  for (long i = 0; i < m; ++i) r *= x + i;
  return r;
}

}  // namespace wz
