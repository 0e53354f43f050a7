#pragma once

// Exact scalars. Every quantity in this library is an arbitrary-precision
// integer or a rational in lowest terms; nothing is ever rounded through a
// float. cpp_rational keeps itself canonical (positive denominator, gcd
// divided out), which the interchange format and all comparisons rely on.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cubetile {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den as a canonical rational. den may be negative or share factors with
// num; it must not be zero. (The raw two-Int constructor of cpp_rational
// rejects negative denominators, hence this wrapper.)
Rational make_rational(Int num, Int den);

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// base^exp by repeated squaring; exp = 0 gives 1.
Int int_pow(Int base, unsigned exp);
Rational rat_pow(const Rational& base, unsigned exp);

// Largest r with r^e <= n, i.e. r^e <= n < (r+1)^e. Requires n >= 1, e >= 1.
Int ifloor_root(const Int& n, unsigned e);

// floor(r) for any sign of r.
Int rat_floor(const Rational& r);

// ceil(p/q) for q > 0, any sign of p.
Int ceil_div(const Int& p, const Int& q);

// Least nonnegative residue of a mod m, m > 0.
Int mod_floor(const Int& a, const Int& m);

// x with a*x == 1 (mod m); requires gcd(a, m) == 1, m >= 1 (m == 1 gives 0).
Int mod_inverse(const Int& a, const Int& m);

// "p/q" in lowest terms, or just "p" for integers — matches what the string
// parser and the JSON documents use.
std::string rat_to_string(const Rational& r);

// Accepts "p", "p/q", and plain decimal literals ("0.6" parses exactly as
// 3/5). Throws errc::parse_error on anything else.
Rational rat_from_string(const std::string& text);

// Decimal integer, optional leading '-'. Throws errc::parse_error otherwise.
Int int_from_string(const std::string& text);

}  // namespace cubetile
