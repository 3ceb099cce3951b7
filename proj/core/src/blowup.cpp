#include <algorithm>
#include <cmath>
#include <string>

#include "wcong/bde.hpp"
#include "wcong/error.hpp"
#include "wcong/roots.hpp"

namespace wcong {

namespace {

struct Monomial {
  Rational coeff;
  int a = 0;  // power of u
  int b = 0;  // power of v
};

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  return {Rational(lhs.coeff * rhs.coeff), lhs.a + rhs.a, lhs.b + rhs.b};
}

struct ChartData {
  MonomialMap map;
  Monomial xu, xv, yu, yv;
  bool exceptional_u = true;
  int result_cap = 0;
  int honest = 0;
};

ChartData chart_data(BlowUpChart chart, int cap) {
  const Monomial zero{Rational(0)};
  switch (chart) {
    case BlowUpChart::H:
      return {{1, 1, 0, 1, 1, 1}, {1, 0, 0}, zero, {1, 0, 1}, {1, 1, 0}, true, 2 * cap + 4, cap};
    case BlowUpChart::H1:
      return {{1, 1, 1, 1, 0, 1}, {1, 0, 1}, {1, 1, 0}, zero, {1, 0, 0}, false, 2 * cap + 4, cap};
    case BlowUpChart::Hp:
      return {{1, 2, 0, 1, 3, 1}, {2, 1, 0}, zero, {3, 2, 1}, {1, 3, 0}, true, 4 * cap + 8, 2 * cap + 1};
    case BlowUpChart::Hn:
      return {{-1, 2, 0, 1, 3, 1}, {-2, 1, 0}, zero, {3, 2, 1}, {1, 3, 0}, true, 4 * cap + 8, 2 * cap + 1};
  }
  throw Error(Errc::domain, "unknown chart");
}

// out += f * mono, dropping terms above out.cap().
void add_times(Series2& out, const Series2& f, const Monomial& mono) {
  if (sgn(mono.coeff) == 0) return;
  for (int n = 0; n <= f.cap(); ++n) {
    for (int k = 0; k <= n; ++k) {
      const Rational& c = f.coeff(n - k, k);
      if (sgn(c) == 0) continue;
      const int a = n - k + mono.a;
      const int b = k + mono.b;
      if (a + b > out.cap()) continue;
      out.set_coeff(a, b, out.coeff(a, b) + c * mono.coeff);
    }
  }
}

int exceptional_power(const Series2& s, bool exceptional_u) {
  int best = -1;
  for (int n = 0; n <= s.cap(); ++n) {
    for (int k = 0; k <= n; ++k) {
      if (sgn(s.coeff(n - k, k)) == 0) continue;
      const int p = exceptional_u ? n - k : k;
      if (best < 0 || p < best) best = p;
    }
  }
  return best;
}

Series2 divide_exceptional(const Series2& s, int power, bool exceptional_u) {
  Series2 out(s.cap());
  for (int n = 0; n <= s.cap(); ++n) {
    for (int k = 0; k <= n; ++k) {
      const Rational& c = s.coeff(n - k, k);
      if (sgn(c) == 0) continue;
      if (exceptional_u) {
        out.set_coeff(n - k - power, k, c);
      } else {
        out.set_coeff(n - k, k - power, c);
      }
    }
  }
  return out;
}

// Coefficient polynomial of exceptional^level, in the other variable.
Poly slice(const Series2& s, int level, bool exceptional_u) {
  Poly out;
  for (int t = 0; t + level <= s.cap(); ++t) out.push_back(exceptional_u ? s.coeff(level, t) : s.coeff(t, level));
  return out;
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(p[i] * static_cast<long>(i)));
  return out;
}

bool poly_zero(const Poly& p) { return degree(p) < 0; }

}  // namespace

const char* to_string(BlowUpChart chart) {
  switch (chart) {
    case BlowUpChart::H: return "H";
    case BlowUpChart::H1: return "H1";
    case BlowUpChart::Hp: return "Hp";
    case BlowUpChart::Hn: return "Hn";
  }
  return "?";
}

const char* to_string(PointType type) {
  switch (type) {
    case PointType::saddle: return "saddle";
    case PointType::node: return "node";
    case PointType::focus: return "focus";
    case PointType::degenerate: return "degenerate";
  }
  return "?";
}

PulledBack pull_back(const PrincipalBDE& bde, BlowUpChart chart) {
  const ChartData d = chart_data(chart, bde.P.cap());
  const Series2 P = substitute_monomial(bde.P, d.map, d.result_cap);
  const Series2 Q = substitute_monomial(bde.Q, d.map, d.result_cap);
  const Series2 Rc = substitute_monomial(bde.Rc, d.map, d.result_cap);
  const Monomial two{Rational(2)};

  PulledBack pb{Series2(d.result_cap), Series2(d.result_cap), Series2(d.result_cap)};
  add_times(pb.E, P, d.yv * d.yv);
  add_times(pb.E, Q, d.xv * d.yv);
  add_times(pb.E, Rc, d.xv * d.xv);
  add_times(pb.F, P, two * d.yu * d.yv);
  add_times(pb.F, Q, d.xu * d.yv);
  add_times(pb.F, Q, d.xv * d.yu);
  add_times(pb.F, Rc, two * d.xu * d.xv);
  add_times(pb.G, P, d.yu * d.yu);
  add_times(pb.G, Q, d.xu * d.yu);
  add_times(pb.G, Rc, d.xu * d.xu);

  int power = -1;
  for (const Series2* s : {&pb.E, &pb.F, &pb.G}) {
    const int p = exceptional_power(*s, d.exceptional_u);
    if (p >= 0 && (power < 0 || p < power)) power = p;
  }
  if (power < 0) throw Error(Errc::domain, "degenerate field: the pulled-back BDE vanishes");
  power = std::min(power, d.honest);
  pb.E = divide_exceptional(pb.E, power, d.exceptional_u);
  pb.F = divide_exceptional(pb.F, power, d.exceptional_u);
  pb.G = divide_exceptional(pb.G, power, d.exceptional_u);
  pb.divided_power = power;
  pb.honest_power = d.honest - power;
  return pb;
}

std::optional<Rational> bde_case(const PrincipalBDE& bde) {
  if (bde.P.cap() < 1) return std::nullopt;
  const Rational px = bde.P.coeff(1, 0);
  if (sgn(px) == 0) return std::nullopt;
  return Rational(bde.Q.coeff(0, 1) / px - 1);
}

std::vector<BlowUpPoint> blow_up_analysis(const PrincipalBDE& bde, BlowUpChart chart) {
  const auto m = bde_case(bde);
  const bool fits = m && ((*m == 1 && chart != BlowUpChart::Hp && chart != BlowUpChart::Hn) ||
                          (*m == 2 && chart != BlowUpChart::H));
  if (!fits) {
    throw Error(Errc::domain, std::string("chart ") + to_string(chart) + " does not fit case m=" +
                                  (m ? to_string(*m) : std::string("undefined")));
  }
  const int cap = std::min(bde.P.cap(), 4);
  const PrincipalBDE low{bde.P.truncated(cap), bde.Q.truncated(cap), bde.Rc.truncated(cap)};
  const PulledBack pb = pull_back(low, chart);
  if (pb.honest_power < 1) throw Error(Errc::insufficient_order, "blow_up_analysis: germ cap too small for the chart");

  const bool exc_u = chart != BlowUpChart::H1;
  // Field components (A, B) = (F', -G') for exceptional u, (E', -F') for exceptional v.
  const Series2& first = exc_u ? pb.F : pb.E;
  const Series2& second = exc_u ? pb.G : pb.F;
  const Poly a0 = slice(first, 0, exc_u);
  const Poly b0 = slice(second, 0, exc_u);
  const Poly a1 = slice(first, 1, exc_u);
  const Poly b1 = slice(second, 1, exc_u);
  const Poly a0d = poly_derivative(a0);
  const Poly b0d = poly_derivative(b0);

  Poly locus;
  if (poly_zero(a0)) {
    locus = b0;
  } else if (poly_zero(b0)) {
    locus = a0;
  } else {
    locus = gcd(a0, b0);
  }
  if (poly_zero(locus)) throw Error(Errc::domain, "degenerate field: the exceptional line is singular");

  std::vector<BlowUpPoint> out;
  for (double t : real_roots(locus)) {
    // Jacobian of (A, -B) in (exceptional, other) coordinates.
    double a_e = evaluate(a1, t), a_o = evaluate(a0d, t);
    double b_e = evaluate(b1, t), b_o = evaluate(b0d, t);
    BlowUpPoint p;
    p.coord = t;
    if (exc_u) {
      // variables (u, v): A_u = a1, A_v = a0', B_u = b1, B_v = b0'.
      p.jacobian_det = -a_e * b_o + a_o * b_e;
      p.trace = a_e - b_o;
    } else {
      // variables (u, v) with v exceptional: A_u = a0', A_v = a1, B_u = b0', B_v = b1.
      p.jacobian_det = -a_o * b_e + a_e * b_o;
      p.trace = a_o - b_e;
    }
    const double scale = 1.0 + std::fabs(a_e) + std::fabs(a_o) + std::fabs(b_e) + std::fabs(b_o);
    if (std::fabs(p.jacobian_det) <= 1e-12 * scale * scale) {
      p.type = PointType::degenerate;
    } else if (p.jacobian_det < 0) {
      p.type = PointType::saddle;
    } else {
      p.type = p.trace * p.trace - 4.0 * p.jacobian_det >= 0 ? PointType::node : PointType::focus;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace wcong
