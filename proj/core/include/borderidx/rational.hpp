#pragma once

#include <gmpxx.h>

#include <string>

namespace borderidx {

// Exact rational coefficient type. All generating-function arithmetic is
// exact; floating point never enters the core.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (base 10). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" rendering (q > 0, gcd(p,q) = 1).
std::string format_rational(const Rational& value);

}  // namespace borderidx
