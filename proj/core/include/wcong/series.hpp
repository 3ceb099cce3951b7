#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wcong/rational.hpp"

namespace wcong {

/// Truncated power series in two variables with exact rational coefficients.
///
/// Every monomial coefficient c_{jk} with j + k <= cap is stored (zeros
/// included) in a dense triangular table; nothing above the cap exists.
/// Storage is monomial form; derivative() / set_derivative() expose the
/// derivative convention g_{jk} = j! k! c_{jk} used by germ files.
///
/// Binary operations require equal caps. Call truncated() explicitly when
/// combining quantities known to different orders.
class Series2 {
 public:
  Series2() : Series2(0) {}
  explicit Series2(int cap);

  static Series2 constant(int cap, const Rational& value);
  static Series2 monomial(int cap, int j, int k, const Rational& coeff = Rational(1));
  static Series2 x(int cap) { return monomial(cap, 1, 0); }
  static Series2 y(int cap) { return monomial(cap, 0, 1); }

  int cap() const noexcept { return cap_; }

  const Rational& coeff(int j, int k) const;
  void set_coeff(int j, int k, const Rational& value);

  Rational derivative(int j, int k) const;
  void set_derivative(int j, int k, const Rational& value);

  /// Value at the origin.
  const Rational& constant_term() const { return coeffs_.front(); }

  bool is_zero() const;

  /// Lowest total degree carrying a nonzero coefficient; -1 for the zero series.
  int order() const;

  /// Drops all terms above new_cap (new_cap <= cap()).
  Series2 truncated(int new_cap) const;

  /// Zero-extends to new_cap >= cap(). The added slots are genuinely zero, so
  /// only use this for series that are polynomials of degree <= cap().
  Series2 padded(int new_cap) const;

  double evaluate(double x, double y) const;

  Series2& operator+=(const Series2& other);
  Series2& operator-=(const Series2& other);
  Series2& operator*=(const Rational& scalar);

  friend Series2 operator+(Series2 lhs, const Series2& rhs) { return lhs += rhs; }
  friend Series2 operator-(Series2 lhs, const Series2& rhs) { return lhs -= rhs; }
  friend Series2 operator*(Series2 lhs, const Rational& scalar) { return lhs *= scalar; }
  friend Series2 operator*(const Rational& scalar, Series2 rhs) { return rhs *= scalar; }
  friend Series2 operator-(Series2 value) { return value *= Rational(-1); }

  friend bool operator==(const Series2& lhs, const Series2& rhs) {
    return lhs.cap_ == rhs.cap_ && lhs.coeffs_ == rhs.coeffs_;
  }

  static std::size_t index(int j, int k) noexcept {
    const auto n = static_cast<std::size_t>(j + k);
    return n * (n + 1) / 2 + static_cast<std::size_t>(k);
  }

 private:
  void check_slot(int j, int k) const;

  int cap_;
  std::vector<Rational> coeffs_;
};

/// Product truncated at the common cap.
Series2 operator*(const Series2& f, const Series2& g);

/// d^{jx+ky} f / dx^{jx} dy^{ky}; the cap drops by jx + ky (floored at 0).
Series2 diff(const Series2& f, int jx, int ky);

/// q with q * g = f up to the cap. g must be a unit (nonzero constant term).
Series2 divide(const Series2& f, const Series2& g);

/// f(px(u,v), py(u,v)) truncated at the common cap. px and py must vanish at
/// the origin so that the truncation stays honest.
Series2 substitute(const Series2& f, const Series2& px, const Series2& py);

/// Compositional inverse (Gx, Gy) of a plane map F = (Fx, Fy) whose linear
/// part is the identity: F(Gx, Gy) = (x, y) up to the cap.
std::pair<Series2, Series2> invert_map(const Series2& fx, const Series2& fy);

/// Exact substitution x -> sx u^ax v^bx, y -> sy u^ay v^by for monomial maps.
/// The result is computed at result_cap, which may exceed f.cap(); terms that
/// land above result_cap are dropped.
struct MonomialMap {
  Rational sx{1};
  int ax = 0, bx = 0;
  Rational sy{1};
  int ay = 0, by = 0;
};
Series2 substitute_monomial(const Series2& f, const MonomialMap& map, int result_cap);

}  // namespace wcong
