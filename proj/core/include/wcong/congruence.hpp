#pragma once

#include "wcong/series.hpp"

namespace wcong {

/// Line congruence germ (x, y, 0) + t (xi1, xi2, 1) over the (x, y) plane.
struct CongruenceGerm {
  Series2 xi1;
  Series2 xi2;

  CongruenceGerm() = default;
  CongruenceGerm(Series2 first, Series2 second);

  int cap() const noexcept { return xi1.cap(); }

  /// Derivative coefficients p_{jk} = d^{j+k} xi1 / dx^j dy^k (0) and q_{jk} likewise.
  Rational p(int j, int k) const { return coeff_or_zero(xi1, j, k); }
  Rational q(int j, int k) const { return coeff_or_zero(xi2, j, k); }

  CongruenceGerm truncated(int new_cap) const { return {xi1.truncated(new_cap), xi2.truncated(new_cap)}; }

  friend bool operator==(const CongruenceGerm& lhs, const CongruenceGerm& rhs) {
    return lhs.xi1 == rhs.xi1 && lhs.xi2 == rhs.xi2;
  }

 private:
  static Rational coeff_or_zero(const Series2& s, int j, int k) {
    return j + k <= s.cap() ? s.derivative(j, k) : Rational(0);
  }
};

/// Entries of the shape operator [[a, b], [c, d]].
struct ShapeCoefficients {
  Series2 a, b, c, d;
};

/// Height function of a graph z = g(x, y) tangent to z = 0 at the origin.
struct GraphGerm {
  Series2 g;

  explicit GraphGerm(Series2 height);
};

/// Highest order at which W, R, S, H and h are determined by a germ of the
/// given cap. These formulas use second derivatives of xi, so they are known
/// through cap - 2.
inline int invariant_cap(int germ_cap) { return germ_cap >= 2 ? germ_cap - 2 : 0; }

ShapeCoefficients shape_coefficients(const CongruenceGerm& germ);

/// delta = (a - d)^2 + 4bc, at cap - 1.
Series2 discriminant(const CongruenceGerm& germ);

/// Weingarten polynomial; the congruence is W iff this vanishes. Cap - 2.
Series2 w_series(const CongruenceGerm& germ);

struct RidgeInvariants {
  Series2 A, B, R;
};
RidgeInvariants ridge_invariants(const CongruenceGerm& germ);

struct SubparabolicInvariants {
  Series2 Abar, Bbar, S;
};
SubparabolicInvariants subparabolic_invariants(const CongruenceGerm& germ);

/// H = c^2 R - S.
Series2 h_invariant(const CongruenceGerm& germ);

/// (c^2 R - S) + 4 c^3 delta W. Zero for every germ.
Series2 hw_identity_residual(const CongruenceGerm& germ);

/// h with W = D (xi2_x - h), D = 2(xi1_xy xi2_yy - xi1_yy xi2_xy).
/// Throws Errc::degenerate_jet when D(0) = 0.
Series2 h_series(const CongruenceGerm& germ);

/// D = 2(xi1_xy xi2_yy - xi1_yy xi2_xy), cap - 2.
Series2 h_denominator(const CongruenceGerm& germ);

/// Normal congruence of the graph written in the chart (X, Y) = (x + g_x g, y + g_y g).
/// The result has cap g.cap() - 1.
CongruenceGerm normal_congruence_from_graph(const GraphGerm& graph);

}  // namespace wcong
