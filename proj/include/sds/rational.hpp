#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sds {

/// Exact rational number. GMP keeps the value canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `INTEGER` or `INTEGER/INTEGER` (optional leading sign).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Human form: "3", "-1/2".
std::string to_string(const Rational& value);

/// Always "num/den", e.g. "-1/1". Used by the JSON reports.
std::string to_fraction_string(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace sds
