#include "wcong/bde.hpp"

#include <cmath>

#include "wcong/error.hpp"

namespace wcong {

PrincipalBDE principal_bde(const CongruenceGerm& germ) {
  PrincipalBDE bde{diff(germ.xi1, 0, 1), diff(germ.xi1, 1, 0) - diff(germ.xi2, 0, 1), -diff(germ.xi2, 1, 0)};
  if (!(bde.Q * bde.Q - Rational(4) * (bde.P * bde.Rc) == discriminant(germ))) {
    throw Error(Errc::consistency, "principal_bde: Q^2 - 4 P Rc differs from delta");
  }
  return bde;
}

double BdeField::Poly2::operator()(double x, double y) const {
  double total = 0.0;
  for (int j = cap; j >= 0; --j) {
    double inner = 0.0;
    for (int k = cap - j; k >= 0; --k) inner = inner * y + c[Series2::index(j, k)];
    total = total * x + inner;
  }
  return total;
}

BdeField::BdeField(const PrincipalBDE& bde) {
  const auto convert = [](const Series2& s) {
    Poly2 p;
    p.cap = s.cap();
    p.c.resize(Series2::index(0, s.cap()) + 1);
    for (int n = 0; n <= s.cap(); ++n) {
      for (int k = 0; k <= n; ++k) p.c[Series2::index(n - k, k)] = s.coeff(n - k, k).get_d();
    }
    return p;
  };
  P_ = convert(bde.P);
  Q_ = convert(bde.Q);
  Rc_ = convert(bde.Rc);
}

BdeField::Coeffs BdeField::at(double x, double y) const { return {P_(x, y), Q_(x, y), Rc_(x, y)}; }

std::optional<std::array<Direction, 2>> slope_pair(const BdeField& field, double x, double y, double tolerance) {
  const auto c = field.at(x, y);
  const double scale = c.P * c.P + c.Q * c.Q + c.Rc * c.Rc;
  const double delta = c.delta();
  if (scale == 0.0 || delta <= tolerance * scale) return std::nullopt;
  const double root = std::sqrt(delta);

  // Eigenvectors of the shape operator [[a, b], [c, d]] with b = -P,
  // a - d = -Q and c = Rc: (b, lambda - a) or (lambda - d, c).
  const auto pick = [&](double sign) {
    const Direction first{-c.P, (c.Q + sign * root) / 2.0};
    const Direction second{(-c.Q + sign * root) / 2.0, c.Rc};
    const double n1 = std::hypot(first.first, first.second);
    const double n2 = std::hypot(second.first, second.second);
    const Direction& v = n1 >= n2 ? first : second;
    const double n = std::max(n1, n2);
    return Direction{v.first / n, v.second / n};
  };
  return std::array<Direction, 2>{pick(1.0), pick(-1.0)};
}

std::optional<std::array<Direction, 2>> slope_pair(const PrincipalBDE& bde, double x, double y, double tolerance) {
  return slope_pair(BdeField(bde), x, y, tolerance);
}

}  // namespace wcong
