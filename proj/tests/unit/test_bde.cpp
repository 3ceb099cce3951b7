#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "wcong/bde.hpp"
#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"

using namespace wcong;

namespace {

Series2 mono(int cap, int j, int k, const Rational& c = 1) { return Series2::monomial(cap, j, k, c); }

// m = 1 normal form with free q20, solved through order 2.
CongruenceGerm m1_germ(const Rational& p11, const Rational& q20) {
  UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(p11, -p11);
  nf.free_coeffs[{Component::q, 2, 0}] = q20;
  return solve_jet(nf, 3).first;
}

CongruenceGerm m2_germ(const Rational& p11, const Rational& q30) {
  UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(p11, -2 * p11);
  nf.free_coeffs[{Component::q, 3, 0}] = q30;
  return solve_jet(nf, 3).first;
}

int count_saddles(const std::vector<BlowUpPoint>& points) {
  int n = 0;
  for (const auto& p : points) n += p.type == PointType::saddle;
  return n;
}

}  // namespace

TEST_SUITE("bde") {

TEST_CASE("principal BDE examples") {
  const CongruenceGerm g1{mono(4, 1, 1), mono(4, 2, 0) - mono(4, 0, 2, Rational(1, 2))};
  const PrincipalBDE b1 = principal_bde(g1);
  CHECK(b1.P == Series2::x(3));
  CHECK(b1.Q == mono(3, 0, 1, 2));
  CHECK(b1.Rc == mono(3, 1, 0, -2));
  CHECK(*bde_case(b1) == 1);

  const CongruenceGerm g2{mono(4, 1, 1), mono(4, 3, 0) - mono(4, 0, 2)};
  const PrincipalBDE b2 = principal_bde(g2);
  CHECK(b2.P == Series2::x(3));
  CHECK(b2.Q == mono(3, 0, 1, 3));
  CHECK(b2.Rc == mono(3, 2, 0, -3));
  CHECK(*bde_case(b2) == 2);

  const PrincipalBDE b0 = principal_bde(CongruenceGerm{Series2(3), Series2(3)});
  CHECK((b0.P.is_zero() && b0.Q.is_zero() && b0.Rc.is_zero()));
  CHECK_FALSE(bde_case(b0).has_value());
}

TEST_CASE("slope pair: Vieta relations and eigen-directions") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  for (int trial = 0; trial < 10; ++trial) {
    const CongruenceGerm g = oracle::random_germ(rng, 4);
    const PrincipalBDE bde = principal_bde(g);
    const BdeField field(bde);
    for (int s = 0; s < 10; ++s) {
      const double x = coord(rng), y = coord(rng);
      const auto dirs = slope_pair(field, x, y);
      const auto c = field.at(x, y);
      if (!dirs) {
        CHECK(c.delta() <= 1e-12 * (c.P * c.P + c.Q * c.Q + c.Rc * c.Rc) + 1e-300);
        continue;
      }
      const double scale = std::fabs(c.P) + std::fabs(c.Q) + std::fabs(c.Rc);
      for (const auto& [dx, dy] : *dirs) {
        CHECK(std::hypot(dx, dy) == doctest::Approx(1.0));
        CHECK(std::fabs(c.P * dy * dy + c.Q * dx * dy + c.Rc * dx * dx) <= 1e-9 * scale);
      }
      // Shape operator S = -D xi; direction 0 carries the larger eigenvalue.
      const double a = -diff(g.xi1, 1, 0).evaluate(x, y), b = -diff(g.xi1, 0, 1).evaluate(x, y);
      const double cc = -diff(g.xi2, 1, 0).evaluate(x, y), d = -diff(g.xi2, 0, 1).evaluate(x, y);
      const double root = std::sqrt((a - d) * (a - d) + 4 * b * cc);
      const double lambda[2] = {(a + d + root) / 2, (a + d - root) / 2};
      for (int i = 0; i < 2; ++i) {
        const auto [vx, vy] = (*dirs)[i];
        CHECK(a * vx + b * vy - lambda[i] * vx == doctest::Approx(0.0).epsilon(1e-9).scale(1 + scale));
        CHECK(cc * vx + d * vy - lambda[i] * vy == doctest::Approx(0.0).epsilon(1e-9).scale(1 + scale));
      }
      if (std::fabs(c.P) > 1e-6) {
        // Slopes s = dy/dx: P (s1 + s2) = -Q and P s1 s2 = Rc.
        const double s1 = (*dirs)[0].second / (*dirs)[0].first, s2 = (*dirs)[1].second / (*dirs)[1].first;
        if (std::isfinite(s1) && std::isfinite(s2) && std::fabs(s1) < 1e6 && std::fabs(s2) < 1e6) {
          CHECK(c.P * (s1 + s2) == doctest::Approx(-c.Q).epsilon(1e-6));
          CHECK(c.P * s1 * s2 == doctest::Approx(c.Rc).epsilon(1e-6));
        }
      }
    }
  }
}

TEST_CASE("slope pair is undefined at the umbilic") {
  const PrincipalBDE bde = principal_bde(m1_germ(1, 2));
  CHECK_FALSE(slope_pair(bde, 0.0, 0.0).has_value());
  CHECK(slope_pair(bde, 0.3, 0.1).has_value());
}

TEST_CASE("pulled-back directions push forward to principal directions") {
  const struct {
    CongruenceGerm germ;
    BlowUpChart chart;
  } cases[] = {{m1_germ(1, 2), BlowUpChart::H},   {m1_germ(1, -3), BlowUpChart::H1},
               {m2_germ(1, 6), BlowUpChart::Hp},  {m2_germ(2, -6), BlowUpChart::Hn},
               {m2_germ(1, 6), BlowUpChart::H1}};
  for (const auto& c : cases) {
    const PrincipalBDE bde = principal_bde(c.germ);
    const PulledBack pb = pull_back(bde, c.chart);
    CHECK(pb.divided_power >= 1);
    const BdeField field(bde);
    for (double u : {0.3, -0.2}) {
      for (double v : {0.5, -0.7}) {
        double x = 0, y = 0, xu = 0, xv = 0, yu = 0, yv = 0;
        switch (c.chart) {
          case BlowUpChart::H: x = u, y = u * v, xu = 1, yu = v, yv = u; break;
          case BlowUpChart::H1: x = u * v, y = v, xu = v, xv = u, yv = 1; break;
          case BlowUpChart::Hp: x = u * u, y = u * u * u * v, xu = 2 * u, yu = 3 * u * u * v, yv = u * u * u; break;
          case BlowUpChart::Hn: x = -u * u, y = u * u * u * v, xu = -2 * u, yu = 3 * u * u * v, yv = u * u * u; break;
        }
        const double E = pb.E.evaluate(u, v), F = pb.F.evaluate(u, v), G = pb.G.evaluate(u, v);
        const double disc = F * F - 4 * E * G;
        if (disc < 0 || std::fabs(E) < 1e-9) continue;
        const auto orig = field.at(x, y);
        for (double sign : {1.0, -1.0}) {
          const double t = (-F + sign * std::sqrt(disc)) / (2 * E);  // dv/du
          const double dx = xu + xv * t, dy = yu + yv * t;
          const double val = orig.P * dy * dy + orig.Q * dx * dy + orig.Rc * dx * dx;
          const double scale = (std::fabs(orig.P) + std::fabs(orig.Q) + std::fabs(orig.Rc)) * (dx * dx + dy * dy);
          CHECK(std::fabs(val) <= 1e-9 * (scale + 1e-30));
        }
      }
    }
  }
}

TEST_CASE("blow-up examples for m = 1") {
  const PrincipalBDE plus = principal_bde(m1_germ(1, 2));
  const auto h = blow_up_analysis(plus, BlowUpChart::H);
  REQUIRE(h.size() == 2);
  CHECK(h[0].coord == doctest::Approx(-std::sqrt(2.0 / 3.0)));
  CHECK(h[1].coord == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(h[0].jacobian_det == doctest::Approx(-16.0));
  CHECK(count_saddles(h) == 2);
  const auto h1 = blow_up_analysis(plus, BlowUpChart::H1);
  REQUIRE(h1.size() == 3);
  CHECK(h1[1].coord == doctest::Approx(0.0));
  CHECK(h1[1].type == PointType::saddle);
  CHECK(h1[1].jacobian_det == doctest::Approx(-6.0));
  CHECK(h1[0].coord == doctest::Approx(-std::sqrt(1.5)));

  CHECK(blow_up_analysis(principal_bde(m1_germ(1, -2)), BlowUpChart::H).empty());
  CHECK_THROWS_AS(blow_up_analysis(plus, BlowUpChart::Hp), Error);
}

TEST_CASE("blow-up examples for m = 2") {
  const auto hn = blow_up_analysis(principal_bde(m2_germ(1, -6)), BlowUpChart::Hn);
  REQUIRE(hn.size() == 2);
  CHECK(hn[1].coord == doctest::Approx(2.0 / 3.0));
  CHECK(hn[1].jacobian_det == doctest::Approx(-288.0));
  CHECK(blow_up_analysis(principal_bde(m2_germ(1, -6)), BlowUpChart::Hp).empty());
  const PrincipalBDE pos = principal_bde(m2_germ(1, 6));
  CHECK(blow_up_analysis(pos, BlowUpChart::Hp).size() == 2);
  CHECK(blow_up_analysis(pos, BlowUpChart::Hn).empty());
  const auto h1 = blow_up_analysis(pos, BlowUpChart::H1);
  REQUIRE_FALSE(h1.empty());
  bool origin_saddle = false;
  for (const auto& p : h1) {
    if (std::fabs(p.coord) < 1e-12) origin_saddle = p.type == PointType::saddle && p.jacobian_det == doctest::Approx(-12.0);
  }
  CHECK(origin_saddle);
  CHECK_THROWS_AS(blow_up_analysis(pos, BlowUpChart::H), Error);
}

TEST_CASE("root-count dichotomy follows the sign of the cubic invariant") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational p11 = oracle::random_nonzero(rng, 5, 3);
    const Rational c = oracle::random_nonzero(rng, 9, 2);
    const auto h = blow_up_analysis(principal_bde(m1_germ(p11, c)), BlowUpChart::H);
    CHECK(h.size() == (sgn(p11 * c) > 0 ? 2u : 0u));
    CHECK(count_saddles(h) == static_cast<int>(h.size()));
    const auto h1 = blow_up_analysis(principal_bde(m1_germ(p11, c)), BlowUpChart::H1);
    CHECK(count_saddles(h1) >= 1);

    const PrincipalBDE b2 = principal_bde(m2_germ(p11, c));
    const auto hp = blow_up_analysis(b2, BlowUpChart::Hp);
    const auto hn = blow_up_analysis(b2, BlowUpChart::Hn);
    CHECK(hp.size() == (sgn(p11 * c) > 0 ? 2u : 0u));
    CHECK(hn.size() == (sgn(p11 * c) < 0 ? 2u : 0u));
    CHECK(count_saddles(hp) + count_saddles(hn) == 2);
  }
}

TEST_CASE("flow figure invariants") {
  IntegrationOptions opt;
  opt.window = 0.5;
  opt.step = 0.02;
  opt.seeds = 3;
  opt.grid = 24;
  const PrincipalBDE bde = principal_bde(m1_germ(1, 2));
  const FlowFigure fig = integrate_configuration(bde, opt);
  CHECK_FALSE(fig.polylines.empty());
  const BdeField field(bde);
  for (const Polyline& line : fig.polylines) {
    CHECK((line.branch == 1 || line.branch == 2));
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      const auto [x, y] = line.points[i];
      CHECK(std::fabs(x) <= opt.window);
      CHECK(std::fabs(y) <= opt.window);
      if (i == 0) continue;
      const auto [px, py] = line.points[i - 1];
      const double len = std::hypot(x - px, y - py);
      CHECK(len <= 2 * opt.step);
      // Away from the umbilic a step follows its own direction field.
      if (std::hypot(x, y) < 5 * opt.step) continue;
      const auto dirs = slope_pair(field, (x + px) / 2, (y + py) / 2);
      if (!dirs || len == 0) continue;
      const auto [dx, dy] = (*dirs)[line.branch - 1];
      CHECK(std::fabs(dx * (y - py) - dy * (x - px)) / len < 0.05);
    }
  }
  std::ostringstream a, b;
  write_csv(fig, a);
  write_csv(integrate_configuration(bde, opt), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("branch,traj_id,x,y\n", 0) == 0);
  std::ostringstream svg;
  write_svg(fig, svg);
  CHECK(svg.str().find("viewBox=\"-0.500000 -0.500000 1.000000 1.000000\"") != std::string::npos);

  CHECK(fig.discriminant.empty());  // delta = 8x^2 + 4y^2 only vanishes at the origin
  const FlowFigure cusp = integrate_configuration(principal_bde(m2_germ(1, 6)), opt);
  CHECK_FALSE(cusp.discriminant.empty());
  for (const auto& seg : cusp.discriminant) {
    for (const auto& [x, y] : seg) CHECK(std::fabs(9 * y * y + 12 * x * x * x) < 0.5);
  }

  opt.step = 0;
  CHECK_THROWS_AS(integrate_configuration(bde, opt), Error);
  CHECK_THROWS_AS(integrate_configuration(principal_bde(CongruenceGerm{Series2(3), Series2(3)}), IntegrationOptions{}),
                  Error);
}

}  // TEST_SUITE
