#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wcong/congruence.hpp"

namespace wcong {

/// P dy^2 + Q dx dy + Rc dx^2 = 0, the eigen-direction condition of the
/// shape operator.
struct PrincipalBDE {
  Series2 P;   // xi1_y
  Series2 Q;   // xi1_x - xi2_y
  Series2 Rc;  // -xi2_x
};

/// Builds the BDE and checks Q^2 - 4 P Rc = delta exactly (Errc::consistency
/// on failure).
PrincipalBDE principal_bde(const CongruenceGerm& germ);

/// Double-precision evaluator of a BDE; the coefficient polynomials are
/// converted once.
class BdeField {
 public:
  explicit BdeField(const PrincipalBDE& bde);

  struct Coeffs {
    double P, Q, Rc;
    double delta() const { return Q * Q - 4.0 * P * Rc; }
  };
  Coeffs at(double x, double y) const;
  double delta(double x, double y) const { return at(x, y).delta(); }

 private:
  struct Poly2 {
    int cap = 0;
    std::vector<double> c;  // Series2 layout
    double operator()(double x, double y) const;
  };
  Poly2 P_, Q_, Rc_;
};

using Direction = std::pair<double, double>;

/// Unit principal directions at a point. Index 0 is the eigen-direction of the
/// larger shape-operator eigenvalue, index 1 of the smaller. Empty when the
/// float discriminant is below tolerance * (P^2 + Q^2 + Rc^2).
std::optional<std::array<Direction, 2>> slope_pair(const BdeField& field, double x, double y,
                                                    double tolerance = 1e-12);
std::optional<std::array<Direction, 2>> slope_pair(const PrincipalBDE& bde, double x, double y,
                                                    double tolerance = 1e-12);

enum class BlowUpChart { H, H1, Hp, Hn };

const char* to_string(BlowUpChart chart);

enum class PointType { saddle, node, focus, degenerate };

const char* to_string(PointType type);

struct BlowUpPoint {
  /// Coordinate along the exceptional line: v for H, Hp, Hn and u for H1.
  double coord = 0.0;
  double jacobian_det = 0.0;
  double trace = 0.0;
  PointType type = PointType::degenerate;
};

/// Pulled-back BDE E dv^2 + F du dv + G du^2 with the exceptional factor divided out.
struct PulledBack {
  Series2 E, F, G;
  int divided_power = 0;
  /// Largest exponent of the exceptional variable known exactly.
  int honest_power = 0;
};

PulledBack pull_back(const PrincipalBDE& bde, BlowUpChart chart);

/// m read from the BDE 1-jets (Q_y / P_x - 1); nullopt when P_x(0) = 0.
std::optional<Rational> bde_case(const PrincipalBDE& bde);

/// Singular points of the first-order field on the exceptional line, typed by
/// the Jacobian determinant. Throws Errc::domain when the chart does not fit
/// the germ's case (H, H1 for m = 1; Hp, Hn, H1 for m = 2).
std::vector<BlowUpPoint> blow_up_analysis(const PrincipalBDE& bde, BlowUpChart chart);

struct Polyline {
  int branch = 1;  // 1 or 2
  std::vector<std::pair<double, double>> points;
};

struct FlowFigure {
  double window = 1.0;
  double step = 0.01;
  std::vector<Polyline> polylines;
  /// Zero set of delta as marching-squares segments.
  std::vector<std::array<std::pair<double, double>, 2>> discriminant;
  /// Trajectories stopped by the step limit rather than the window or delta.
  int truncated_trajectories = 0;
};

struct IntegrationOptions {
  double window = 1.0;
  double step = 0.01;
  int seeds = 8;      // per side of the window
  int grid = 128;     // marching-squares cells per side
  int max_steps = 0;  // 0: 4 * window / step
};

FlowFigure integrate_configuration(const PrincipalBDE& bde, const IntegrationOptions& options);

void write_csv(const FlowFigure& figure, std::ostream& out);
void write_svg(const FlowFigure& figure, std::ostream& out);

}  // namespace wcong
