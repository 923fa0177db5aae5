#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace diagram {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using Matrix = std::vector<RationalVector>;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Lowest-terms text: bare integer when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Integer binomial(long n, long k);

}  // namespace diagram
