#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace flatnorm {

// All optimization runs over arbitrary-precision rationals; doubles appear
// only in geometry and reporting.
using Rational = mpq_class;
using Integer = mpz_class;

/// True iff the (canonicalized) rational has denominator 1.
bool is_integer(const Rational& q);

/// Exact conversion of an IEEE-754 double to a rational (no rounding at all;
/// every finite double is a dyadic rational). This is how real-valued weights
/// enter the exact optimization layer: the represented instance is the one
/// echoed back in results.
Rational rational_from_double(double x);

/// Parse "3", "-3/4" or a decimal literal like "0.01"/"1.25e-3" as an exact
/// rational. Decimal strings are read digit-exactly (0.01 -> 1/100), not via
/// a double round trip.
Rational parse_rational(const std::string& text);

/// Lossless-ish display: "p" or "p/q".
std::string to_string(const Rational& q);

/// Nearest double (GMP rounding).
double to_double(const Rational& q);

/// Checked narrowing of an exact integer rational to int64.
std::int64_t to_int64(const Rational& q);

} // namespace flatnorm
