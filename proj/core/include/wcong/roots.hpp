#pragma once

#include <vector>

#include "wcong/rational.hpp"

namespace wcong {

/// Univariate polynomial, coefficient of t^i at index i.
using Poly = std::vector<Rational>;

/// Degree after discarding zero leading coefficients; -1 for the zero polynomial.
int degree(const Poly& p);

Rational evaluate(const Poly& p, const Rational& t);
double evaluate(const Poly& p, double t);

/// Monic greatest common divisor; empty when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Distinct rational roots, ascending. Throws Errc::domain for the zero
/// polynomial or when the rational-root candidates are too large to enumerate.
std::vector<Rational> rational_roots(const Poly& p);

/// Distinct real roots, ascending, isolated exactly with a Sturm sequence and
/// refined to double precision. Throws Errc::domain for the zero polynomial.
std::vector<double> real_roots(const Poly& p);

}  // namespace wcong
