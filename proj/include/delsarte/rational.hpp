#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace delsarte {

// Exact arbitrary-precision rational. All certification arithmetic runs on
// this type; doubles appear only in LP search and plotting.
using Rational = mpq_class;
using Integer = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

Integer pow10(unsigned digits);

// Parses a plain decimal string: -?[0-9]+(\.[0-9]+)?
// Returns nullopt on anything else (exponents, stray characters, empty).
std::optional<Rational> parse_decimal(const std::string& text);

// Renders q as a plain decimal string. Requires the reduced denominator to
// be of the form 2^a * 5^b; returns nullopt otherwise.
std::optional<std::string> format_decimal(const Rational& q);

// Nearest decimal with the given number of fractional digits (ties away
// from zero).
Rational round_decimal(const Rational& q, unsigned digits);

// cos(deg * pi / 180) rounded to `digits` fractional decimal digits.
// Computed with 256-bit MPFR internals, so the quantization step dominates
// any intermediate error. Exact angles like 60 and 90 come out as the exact
// rationals 1/2 and 0.
Rational cos_deg_fixed(const Rational& deg_value, unsigned digits = 40);

// Largest rational r with r <= sqrt(q) and sqrt(q) - r <= 10^-scale_digits.
// Requires q >= 0.
Rational sqrt_below(const Rational& q, unsigned scale_digits = 30);

// Smallest rational r with r >= sqrt(q), within 10^-scale_digits of sqrt(q).
Rational sqrt_above(const Rational& q, unsigned scale_digits = 30);

}  // namespace delsarte
