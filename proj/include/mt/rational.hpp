#pragma once

#include <gmpxx.h>

#include <string>

namespace mt {

using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading '-'; nothing else.
Rational parse_rational(const std::string& s);

// Lowest terms, positive denominator, "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace mt
