#include "cubetile/rational.hpp"

#include "cubetile/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace cubetile {

Rational make_rational(Int num, Int den) {
  if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);  // canonicalizes gcd; den > 0 now
}

Int int_pow(Int base, unsigned exp) {
  Int result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp != 0) base *= base;
  }
  return result;
}

Rational rat_pow(const Rational& base, unsigned exp) {
  return make_rational(int_pow(rat_num(base), exp), int_pow(rat_den(base), exp));
}

Int ifloor_root(const Int& n, unsigned e) {
  if (n < 1) fail(errc::invalid_argument, "ifloor_root: n must be >= 1");
  if (e < 1) fail(errc::invalid_argument, "ifloor_root: exponent must be >= 1");
  if (e == 1) return n;
  if (n == 1) return Int(1);

  // Start from a power of two guaranteed >= the root, then run Newton's
  // iteration, which decreases monotonically until it straddles the answer.
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Int x = Int(1) << ((bits + e - 1) / e);
  for (;;) {
    Int next = ((e - 1) * x + n / int_pow(x, e - 1)) / e;
    if (next >= x) break;
    x = next;
  }
  // Newton can land one step off in either direction; correct exactly.
  while (int_pow(x, e) > n) --x;
  while (int_pow(x + 1, e) <= n) ++x;
  return x;
}

Int rat_floor(const Rational& r) {
  Int q = rat_num(r) / rat_den(r);  // truncates toward zero
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

Int ceil_div(const Int& p, const Int& q) {
  if (q <= 0) fail(errc::invalid_argument, "ceil_div: divisor must be positive");
  Int d = p / q;
  if (p > 0 && d * q != p) ++d;
  return d;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) fail(errc::invalid_argument, "mod_floor: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) fail(errc::invalid_argument, "mod_inverse: modulus must be >= 1");
  if (m == 1) return Int(0);
  // Iterative extended Euclid on (a mod m, m), tracking only the coefficient
  // of a.
  Int r0 = mod_floor(a, m), r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) fail(errc::invalid_argument, "mod_inverse: arguments are not coprime");
  return mod_floor(s0, m);
}

std::string rat_to_string(const Rational& r) {
  return r.str();  // cpp_rational prints "p/q", or "p" when q == 1
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Int int_from_string(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (!all_digits(body)) fail(errc::parse_error, "not an integer: \"" + text + "\"");
  Int value(body);
  return negative ? -value : value;
}

Rational rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (text.find('/', slash + 1) != std::string::npos || text.find('.') != std::string::npos)
      fail(errc::parse_error, "not a rational: \"" + text + "\"");
    Int num = int_from_string(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text) || Int(den_text) == 0)
      fail(errc::parse_error, "not a rational: \"" + text + "\"");
    return make_rational(num, Int(den_text));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(int_from_string(text));

  // Decimal literal: sign, integer part, '.', fractional digits — exact.
  std::string head = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  bool negative = false;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    negative = head[0] == '-';
    head.erase(0, 1);
  }
  if ((head.empty() && frac.empty()) || (!head.empty() && !all_digits(head)) ||
      (!frac.empty() && !all_digits(frac)))
    fail(errc::parse_error, "not a rational: \"" + text + "\"");
  Int scale = int_pow(10, static_cast<unsigned>(frac.size()));
  Int num = (head.empty() ? Int(0) : Int(head)) * scale + (frac.empty() ? Int(0) : Int(frac));
  if (negative) num = -num;
  return make_rational(num, scale);
}

}  // namespace cubetile
