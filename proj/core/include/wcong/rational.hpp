#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace wcong {

/// Exact signed rational, always kept in canonical form (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or "num" (optional leading '-'). Returns nullopt for any
/// other text, including a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer factorial(int n);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// True when value is a positive integer.
bool is_natural(const Rational& value);

}  // namespace wcong
