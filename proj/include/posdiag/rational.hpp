#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "posdiag/errors.hpp"

namespace posdiag {

// Exact arithmetic everywhere: no floating point enters any computation.
// cpp_rational keeps values reduced with positive denominator, which is
// exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (q > 0 after reduction). Throws data_error on junk.
Rational parse_rational(const std::string& text);

/// Floor of sqrt for nonnegative integers.
Int isqrt(const Int& x);

bool is_perfect_square(const Int& x);

/// Exact integer power with small exponent.
Rational pow(const Rational& base, unsigned exp);

} // namespace posdiag
