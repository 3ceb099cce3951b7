#include "wcong/congruence.hpp"

#include <string>

#include "wcong/error.hpp"

namespace wcong {

namespace {

void require_cap(const CongruenceGerm& germ, int minimum, const char* op) {
  if (germ.cap() < minimum) {
    throw Error(Errc::insufficient_order,
                std::string(op) + ": needs cap >= " + std::to_string(minimum) + ", got " + std::to_string(germ.cap()));
  }
}

// First derivatives of the shape coefficients, all at cap - 2.
struct ShapeJet {
  Series2 a, b, c, d;
  Series2 ax, ay, bx, by, cx, cy, dx, dy;
};

ShapeJet shape_jet(const CongruenceGerm& germ) {
  const int cap = invariant_cap(germ.cap());
  const ShapeCoefficients s = shape_coefficients(germ);
  ShapeJet j;
  j.a = s.a.truncated(cap);
  j.b = s.b.truncated(cap);
  j.c = s.c.truncated(cap);
  j.d = s.d.truncated(cap);
  j.ax = diff(s.a, 1, 0);
  j.ay = diff(s.a, 0, 1);
  j.bx = diff(s.b, 1, 0);
  j.by = diff(s.b, 0, 1);
  j.cx = diff(s.c, 1, 0);
  j.cy = diff(s.c, 0, 1);
  j.dx = diff(s.d, 1, 0);
  j.dy = diff(s.d, 0, 1);
  return j;
}

Series2 square(const Series2& f) { return f * f; }

}  // namespace

CongruenceGerm::CongruenceGerm(Series2 first, Series2 second) : xi1(std::move(first)), xi2(std::move(second)) {
  if (xi1.cap() != xi2.cap()) throw Error(Errc::structural, "germ components must share the cap");
}

GraphGerm::GraphGerm(Series2 height) : g(std::move(height)) {
  const auto slot = [this](int j, int k) { return j + k <= g.cap() ? g.coeff(j, k) : Rational(0); };
  if (sgn(slot(0, 0)) != 0 || sgn(slot(1, 0)) != 0 || sgn(slot(0, 1)) != 0) {
    throw Error(Errc::precondition, "graph germ must have zero constant and linear terms");
  }
}

ShapeCoefficients shape_coefficients(const CongruenceGerm& germ) {
  return {-diff(germ.xi1, 1, 0), -diff(germ.xi1, 0, 1), -diff(germ.xi2, 1, 0), -diff(germ.xi2, 0, 1)};
}

Series2 discriminant(const CongruenceGerm& germ) {
  const ShapeCoefficients s = shape_coefficients(germ);
  return square(s.a - s.d) + Rational(4) * (s.b * s.c);
}

Series2 w_series(const CongruenceGerm& germ) {
  require_cap(germ, 2, "w_series");
  const int cap = invariant_cap(germ.cap());
  const Series2 p_x = diff(germ.xi1, 1, 0).truncated(cap);
  const Series2 p_y = diff(germ.xi1, 0, 1).truncated(cap);
  const Series2 q_x = diff(germ.xi2, 1, 0).truncated(cap);
  const Series2 q_y = diff(germ.xi2, 0, 1).truncated(cap);
  const Series2 p_xx = diff(germ.xi1, 2, 0);
  const Series2 p_xy = diff(germ.xi1, 1, 1);
  const Series2 p_yy = diff(germ.xi1, 0, 2);
  const Series2 q_xx = diff(germ.xi2, 2, 0);
  const Series2 q_xy = diff(germ.xi2, 1, 1);
  const Series2 q_yy = diff(germ.xi2, 0, 2);

  return (q_y - p_x) * (q_xx * p_yy - p_xx * q_yy) - Rational(2) * (p_y * (p_xx * q_xy - q_xx * p_xy)) +
         Rational(2) * (q_x * (p_xy * q_yy - p_yy * q_xy));
}

RidgeInvariants ridge_invariants(const CongruenceGerm& germ) {
  require_cap(germ, 2, "ridge_invariants");
  const ShapeJet s = shape_jet(germ);
  const Series2 amd = s.a - s.d;
  const Series2 delta = square(amd) + Rational(4) * (s.b * s.c);

  Series2 A = amd * s.ax + s.c * s.dy + Rational(2) * (s.c * s.ay) + s.b * s.cx;
  Series2 B = square(amd) * s.ax + amd * (Rational(2) * (s.c * s.ay) - s.c * s.dy + s.b * s.cx) +
              Rational(2) * (s.c * (Rational(2) * (s.b * s.dx) + s.b * s.ax + s.c * s.by));
  Series2 R = square(A) * delta - square(B);
  return {std::move(A), std::move(B), std::move(R)};
}

SubparabolicInvariants subparabolic_invariants(const CongruenceGerm& germ) {
  require_cap(germ, 2, "subparabolic_invariants");
  const ShapeJet s = shape_jet(germ);
  const Series2 amd = s.a - s.d;
  const Series2 amd2 = square(amd);
  const Series2 bc = s.b * s.c;
  const Series2 cc = square(s.c);
  const Series2 delta = amd2 + Rational(4) * bc;
  const Series2 ax_2dx = s.ax - Rational(2) * s.dx;

  Series2 Abar = s.cx * (amd2 + bc) - s.c * amd * ax_2dx + cc * (s.dy - Rational(2) * s.ay);
  Series2 Bbar = -(s.c * (amd2 + Rational(2) * bc) * ax_2dx) + (amd2 + Rational(3) * bc) * amd * s.cx -
                 cc * amd * (Rational(2) * s.ay - s.dy) - Rational(2) * (cc * s.c * s.by);
  Series2 S = square(Abar) * delta - square(Bbar);
  return {std::move(Abar), std::move(Bbar), std::move(S)};
}

Series2 h_invariant(const CongruenceGerm& germ) {
  const Series2 c = (-diff(germ.xi2, 1, 0)).truncated(invariant_cap(germ.cap()));
  return square(c) * ridge_invariants(germ).R - subparabolic_invariants(germ).S;
}

Series2 hw_identity_residual(const CongruenceGerm& germ) {
  const int cap = invariant_cap(germ.cap());
  const Series2 c = (-diff(germ.xi2, 1, 0)).truncated(cap);
  const Series2 delta = discriminant(germ).truncated(cap);
  return h_invariant(germ) + Rational(4) * (square(c) * c * delta * w_series(germ));
}

Series2 h_denominator(const CongruenceGerm& germ) {
  require_cap(germ, 2, "h_series");
  return Rational(2) *
         (diff(germ.xi1, 1, 1) * diff(germ.xi2, 0, 2) - diff(germ.xi1, 0, 2) * diff(germ.xi2, 1, 1));
}

Series2 h_series(const CongruenceGerm& germ) {
  const Series2 den = h_denominator(germ);
  if (sgn(den.constant_term()) == 0) throw Error(Errc::degenerate_jet, "h_series: degenerate 2-jet");
  const int cap = invariant_cap(germ.cap());
  const Series2 p_x = diff(germ.xi1, 1, 0).truncated(cap);
  const Series2 p_y = diff(germ.xi1, 0, 1).truncated(cap);
  const Series2 q_y = diff(germ.xi2, 0, 1).truncated(cap);
  const Series2 p_xx = diff(germ.xi1, 2, 0);
  const Series2 p_xy = diff(germ.xi1, 1, 1);
  const Series2 p_yy = diff(germ.xi1, 0, 2);
  const Series2 q_xx = diff(germ.xi2, 2, 0);
  const Series2 q_xy = diff(germ.xi2, 1, 1);
  const Series2 q_yy = diff(germ.xi2, 0, 2);
  const Series2 num =
      (p_x - q_y) * (q_xx * p_yy - p_xx * q_yy) + Rational(2) * (p_y * (p_xx * q_xy - q_xx * p_xy));
  return divide(num, den);
}

CongruenceGerm normal_congruence_from_graph(const GraphGerm& graph) {
  const Series2& g = graph.g;
  if (g.cap() < 3) throw Error(Errc::insufficient_order, "normal_congruence_from_graph: needs cap >= 3");
  const int cap = g.cap() - 1;
  const Series2 gx = diff(g, 1, 0);
  const Series2 gy = diff(g, 0, 1);
  const Series2 gt = g.truncated(cap);
  const Series2 X = Series2::x(cap) + gx * gt;
  const Series2 Y = Series2::y(cap) + gy * gt;
  const auto [inv_x, inv_y] = invert_map(X, Y);
  return {substitute(-gx, inv_x, inv_y), substitute(-gy, inv_x, inv_y)};
}

}  // namespace wcong
