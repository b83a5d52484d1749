#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace origami {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers, and finite decimal literals ("-1.25", "3e-2").
// Decimals are converted exactly; no binary floating point is involved.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

std::optional<Rational> rational_sqrt(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace origami
