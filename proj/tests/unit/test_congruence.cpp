#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "wcong/congruence.hpp"
#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"

using namespace wcong;

namespace {

Series2 mono(int cap, int j, int k, const Rational& c = 1) { return Series2::monomial(cap, j, k, c); }

// xi1 = xy, xi2 = x^2 - y^2/2
CongruenceGerm m1_germ(int cap) { return {mono(cap, 1, 1), mono(cap, 2, 0) - mono(cap, 0, 2, Rational(1, 2))}; }
// xi1 = xy, xi2 = -y^2 + x^3
CongruenceGerm m2_germ(int cap) { return {mono(cap, 1, 1), mono(cap, 3, 0) - mono(cap, 0, 2)}; }

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("germ components share the cap") {
  CHECK_THROWS_AS(CongruenceGerm(Series2(3), Series2(4)), Error);
  const CongruenceGerm g = m2_germ(4);
  CHECK(g.p(1, 1) == 1);
  CHECK(g.q(3, 0) == 6);
  CHECK(g.q(0, 2) == -2);
  CHECK(g.q(7, 0) == 0);
}

TEST_CASE("shape coefficients") {
  const int cap = 4;
  ShapeCoefficients s = shape_coefficients(m1_germ(cap));
  CHECK(s.a == -Series2::y(3));
  CHECK(s.b == -Series2::x(3));
  CHECK(s.c == mono(3, 1, 0, -2));
  CHECK(s.d == Series2::y(3));
  s = shape_coefficients(m2_germ(cap));
  CHECK(s.c == mono(3, 2, 0, -3));
  CHECK(s.d == mono(3, 0, 1, 2));
  s = shape_coefficients(CongruenceGerm{Series2(cap), Series2(cap)});
  CHECK((s.a.is_zero() && s.b.is_zero() && s.c.is_zero() && s.d.is_zero()));
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(m1_germ(4)) == mono(3, 2, 0, 8) + mono(3, 0, 2, 4));
  CHECK(discriminant(m2_germ(4)) == mono(3, 0, 2, 9) + mono(3, 3, 0, 12));
  for (const Rational m : {Rational(2), Rational(5, 2), Rational(-3, 7)}) {
    const CongruenceGerm g{mono(5, 1, 1), mono(5, 0, 2, -m / 2)};
    CHECK(discriminant(g) == mono(4, 0, 2, (1 + m) * (1 + m)));
  }
}

TEST_CASE("discriminant agrees with the sparse oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int cap = 2 + trial % 4;
    const CongruenceGerm g = oracle::random_germ(rng, cap);
    CHECK(oracle::same(discriminant(g), oracle::discriminant(oracle::from(g.xi1), oracle::from(g.xi2), cap - 1)));
  }
}

TEST_CASE("W examples") {
  CHECK(w_series(m1_germ(5)).is_zero());
  CHECK(w_series(m1_germ(5)).cap() == 3);
  std::mt19937_64 rng(5);
  for (int m = 1; m <= 5; ++m) {
    const Rational C = oracle::random_rational(rng, 9, 4);
    CHECK(w_series(monomial_family(m, C, m + 4)).is_zero());
  }
  const CongruenceGerm flat{mono(4, 2, 0, Rational(1, 2)), Series2(4)};
  CHECK(w_series(flat).is_zero());
  const CongruenceGerm not_w{mono(3, 1, 1), mono(3, 2, 0, Rational(1, 2))};
  CHECK(w_series(not_w).derivative(1, 0) == 2);
  CHECK_THROWS_AS(w_series(CongruenceGerm{Series2(1), Series2(1)}), Error);
}

TEST_CASE("W agrees with the sparse oracle") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const int cap = 2 + trial % 4;
    const CongruenceGerm g = oracle::random_germ(rng, cap);
    CHECK(oracle::same(w_series(g), oracle::weingarten(oracle::from(g.xi1), oracle::from(g.xi2), cap - 2)));
  }
}

TEST_CASE("W with b = c = 0 factors as (d - a) a_x d_y") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const int cap = 3 + trial % 4;
    Series2 xi1(cap), xi2(cap);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int n = 0; n <= cap; ++n) {
      xi1.set_coeff(n, 0, coeff(rng));
      xi2.set_coeff(0, n, coeff(rng));
    }
    const CongruenceGerm g{xi1, xi2};
    const ShapeCoefficients s = shape_coefficients(g);
    const int wc = cap - 2;
    const Series2 expected = (s.d - s.a).truncated(wc) * diff(s.a, 1, 0) * diff(s.d, 0, 1);
    CHECK(w_series(g) == expected);
    const SubparabolicInvariants sp = subparabolic_invariants(g);
    CHECK(sp.Abar.is_zero());
    CHECK(sp.Bbar.is_zero());
  }
}

TEST_CASE("ridge invariant witnesses") {
  const RidgeInvariants r1 = ridge_invariants(m1_germ(6));
  CHECK(r1.R.derivative(2, 2) == -768);  // -192 p11^4 q20^2 at p11 = 1, q20 = 2
  const RidgeInvariants r2 = ridge_invariants(m2_germ(8));
  CHECK(r2.R.derivative(4, 2) == -124416);  // -3456 p11^4 q30^2 at q30 = 6
  const RidgeInvariants r0 = ridge_invariants(CongruenceGerm{Series2(4), Series2(4)});
  CHECK((r0.A.is_zero() && r0.B.is_zero() && r0.R.is_zero()));
  CHECK(subparabolic_invariants(CongruenceGerm{Series2(4), Series2(4)}).S.is_zero());
}

TEST_CASE("R is A^2 delta - B^2 and S is Abar^2 delta - Bbar^2") {
  std::mt19937_64 rng(34);
  const CongruenceGerm g = oracle::random_germ(rng, 5);
  const Series2 delta = discriminant(g).truncated(3);
  const RidgeInvariants r = ridge_invariants(g);
  CHECK(r.R == r.A * r.A * delta - r.B * r.B);
  const SubparabolicInvariants s = subparabolic_invariants(g);
  CHECK(s.S == s.Abar * s.Abar * delta - s.Bbar * s.Bbar);
}

TEST_CASE("H relates to W with the sign c^2 R - S = -4 c^3 delta W") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const int cap = 2 + trial % 5;
    const CongruenceGerm g = oracle::random_germ(rng, cap);
    CHECK(hw_identity_residual(g).is_zero());
    const int ic = invariant_cap(cap);
    const Series2 c = (-diff(g.xi2, 1, 0)).truncated(ic);
    const Series2 rhs = Rational(-4) * (c * c * c * discriminant(g).truncated(ic) * w_series(g));
    CHECK(h_invariant(g) == rhs);
  }
  CHECK(hw_identity_residual(CongruenceGerm{Series2(4), Series2(4)}).is_zero());
  CHECK(hw_identity_residual(m2_germ(6)).is_zero());
}

TEST_CASE("h factorization") {
  const CongruenceGerm g = m2_germ(6);
  CHECK(h_series(g) == diff(g.xi2, 1, 0).truncated(4));
  CHECK(h_series(CongruenceGerm{mono(5, 1, 1), mono(5, 0, 2, Rational(-1, 2))}).is_zero());
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    CongruenceGerm r = oracle::random_germ(rng, 5);
    r.xi1.set_coeff(2, 0, 0);
    r.xi1.set_coeff(0, 2, 0);
    r.xi2.set_coeff(1, 1, 0);
    r.xi1.set_coeff(1, 1, oracle::random_nonzero(rng, 5, 1));
    r.xi2.set_coeff(0, 2, oracle::random_nonzero(rng, 5, 1));
    CHECK(h_denominator(r).constant_term() == 2 * r.p(1, 1) * r.q(0, 2));
    const Series2 h = h_series(r);
    CHECK(w_series(r) == h_denominator(r) * (diff(r.xi2, 1, 0).truncated(3) - h));
  }
  const CongruenceGerm degenerate{mono(4, 2, 0), mono(4, 0, 2)};
  try {
    (void)h_series(degenerate);
    FAIL("expected degenerate_jet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_jet);
    CHECK(std::string(e.what()).find("degenerate 2-jet") != std::string::npos);
  }
}

TEST_CASE("normal congruence of a graph") {
  const int cap = 5;
  GraphGerm quad(mono(cap, 2, 0, Rational(3, 2)) + mono(cap, 0, 2, Rational(-1, 2)));  // g20 = 3, g02 = -1
  const CongruenceGerm nq = normal_congruence_from_graph(quad);
  CHECK(nq.cap() == cap - 1);
  CHECK(-nq.p(1, 0) == 3);
  CHECK(-nq.q(0, 1) == -1);
  CHECK(nq.p(0, 1) == 0);
  CHECK(nq.q(1, 0) == 0);

  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Series2 g(cap);
  g.set_derivative(2, 0, 2);
  g.set_derivative(0, 2, 7);
  int gd[4];
  for (int k = 0; k <= 3; ++k) g.set_derivative(3 - k, k, gd[k] = coeff(rng));
  const CongruenceGerm n = normal_congruence_from_graph(GraphGerm(g));
  // a = -xi1_x, b = -xi1_y, c = -xi2_x, d = -xi2_y
  CHECK(-n.p(2, 0) == gd[0]);  // a_X = g30
  CHECK(-n.p(1, 1) == gd[1]);  // a_Y = g21
  CHECK(-n.q(1, 1) == gd[2]);  // d_X = g12
  CHECK(-n.q(0, 2) == gd[3]);  // d_Y = g03
  CHECK(-n.p(1, 1) == gd[1]);  // b_X = g21
  CHECK(-n.q(2, 0) == gd[1]);  // c_X = g21
  CHECK(-n.p(0, 2) == gd[2]);  // b_Y = g12
  CHECK(-n.q(1, 1) == gd[2]);  // c_Y = g12

  const CongruenceGerm z = normal_congruence_from_graph(GraphGerm(Series2(cap)));
  CHECK((z.xi1.is_zero() && z.xi2.is_zero()));
  CHECK_THROWS_AS(GraphGerm(Series2::x(3)), Error);
}

TEST_CASE("normal congruence: W(0) = 0 iff g30 g03 - g21 g12 = 0") {
  std::mt19937_64 rng(38);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 12; ++trial) {
    Series2 g(4);
    g.set_derivative(2, 0, 1 + trial % 3);
    g.set_derivative(0, 2, -2);
    int g30 = coeff(rng), g21 = coeff(rng), g12 = coeff(rng), g03 = coeff(rng);
    if (trial % 3 == 0) {
      g03 = 0;
      g21 = 0;
    }
    g.set_derivative(3, 0, g30);
    g.set_derivative(2, 1, g21);
    g.set_derivative(1, 2, g12);
    g.set_derivative(0, 3, g03);
    const Series2 w = w_series(normal_congruence_from_graph(GraphGerm(g)));
    CHECK((sgn(w.constant_term()) == 0) == (g30 * g03 - g21 * g12 == 0));
  }
}

}  // TEST_SUITE
