#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "wcong/classifier.hpp"
#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"

using namespace wcong;

namespace {

Series2 mono(int cap, int j, int k, const Rational& c = 1) { return Series2::monomial(cap, j, k, c); }

// Random rational linear change (x, y) -> (a x + b y, c x + d y) with nonzero determinant.
Series2 random_linear_image(std::mt19937_64& rng, const Series2& f) {
  for (;;) {
    const Rational a = oracle::random_rational(rng, 3, 2), b = oracle::random_rational(rng, 3, 2);
    const Rational c = oracle::random_rational(rng, 3, 2), d = oracle::random_rational(rng, 3, 2);
    if (sgn(a * d - b * c) == 0) continue;
    const int cap = f.cap();
    return substitute(f, a * Series2::x(cap) + b * Series2::y(cap), c * Series2::x(cap) + d * Series2::y(cap));
  }
}

// Random unit 1 + (higher terms).
Series2 random_unit(std::mt19937_64& rng, int cap) {
  Series2 u = oracle::to_series(oracle::random_poly(rng, cap, -3, 3), cap);
  u.set_coeff(0, 0, oracle::random_nonzero(rng, 3, 1));
  return u;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("umbilicity and nondegeneracy") {
  const CongruenceGerm g{mono(4, 1, 1), mono(4, 0, 2, Rational(-1, 2))};
  CHECK(is_umbilic(g));
  const NondegeneracyReport r = nondegeneracy(g);
  CHECK(r.nondegenerate);
  CHECK(r.omega[1] == -1);  // p11 q02 - p02 q11
  CHECK(r.jay[1] == -2);
  const CongruenceGerm flat{Series2(4), Series2(4)};
  CHECK_FALSE(nondegeneracy(flat).nondegenerate);
  CongruenceGerm shifted = g;
  shifted.xi1 += Series2::x(4);
  shifted.xi2 += Series2::y(4);
  CHECK(is_umbilic(shifted));
  shifted.xi2 += Series2::x(4);
  CHECK_FALSE(is_umbilic(shifted));
  CHECK_THROWS_AS(nondegeneracy(shifted), Error);
}

TEST_CASE("verdict examples") {
  SingularityVerdict v = classify_discriminant(mono(4, 2, 0, 4) + mono(4, 0, 2, 2), 10);
  CHECK(v.kind == SingularityKind::A1_plus);
  CHECK(*v.witness("hessian_det") == 32);
  v = classify_discriminant(mono(4, 2, 0, 4) - mono(4, 0, 2, 2), 10);
  CHECK(v.kind == SingularityKind::A1_minus);

  v = classify_discriminant(mono(4, 0, 2, 9) + mono(4, 3, 0, 12), 10);
  CHECK(v.kind == SingularityKind::A2);
  CHECK(*v.witness("g30") == 72);
  CHECK(v.kernel_unit->first == doctest::Approx(1.0));

  v = classify_discriminant(mono(5, 0, 2, 16) + mono(5, 4, 0, 16), 10);
  CHECK(v.kind == SingularityKind::A3);
  CHECK(*v.witness("T3") == 24 * 16 * 32);
  CHECK(v.label() == "A3");

  v = classify_discriminant(mono(6, 0, 2, 25) + mono(6, 5, 0, 20), 10);
  CHECK(v.kind == SingularityKind::A4);
  CHECK(*v.witness("T4") == Rational(120 * 20) * 50 * 50);

  v = classify_discriminant(mono(7, 0, 2, Rational(49, 4)), 100);
  CHECK(v.kind == SingularityKind::A_infinity_to_cap);
  CHECK(v.ainf_cap == 7);
  CHECK(v.label() == "A_infinity_to_cap(7)");
  v = classify_discriminant(mono(7, 0, 2, Rational(49, 4)), 5);
  CHECK(v.ainf_cap == 5);

  v = classify_discriminant(mono(8, 0, 2) + mono(8, 6, 0), 100);
  CHECK(v.kind == SingularityKind::unresolved);
  CHECK(v.witness("psi_6") != nullptr);

  v = classify_discriminant(mono(4, 3, 0), 10);
  CHECK(v.kind == SingularityKind::unresolved);
  CHECK(v.diagnostic == "2-jet vanishes (rank 0)");

  CHECK_THROWS_AS(classify_discriminant(Series2::constant(3, 1), 10), Error);
  CHECK_THROWS_AS(classify_discriminant(Series2::x(3), 10), Error);
}

TEST_CASE("insufficient caps are reported, not guessed") {
  SingularityVerdict v = classify_discriminant(mono(3, 0, 2), 10);
  CHECK(v.kind == SingularityKind::unresolved);
  CHECK(v.diagnostic.find("too small") != std::string::npos);
  v = classify_discriminant(mono(4, 0, 2), 10);
  CHECK(v.kind == SingularityKind::unresolved);
}

TEST_CASE("kernel on the y-axis") {
  const SingularityVerdict v = classify_discriminant(mono(5, 2, 0, 2) + mono(5, 0, 3, 6), 10);
  CHECK(v.kind == SingularityKind::A2);
  CHECK(*v.kernel == std::make_pair(Rational(0), Rational(1)));
}

TEST_CASE("verdict is invariant under linear changes and unit factors") {
  std::mt19937_64 rng(51);
  const Series2 normal_forms[] = {
      mono(6, 2, 0) + mono(6, 0, 2),  mono(6, 2, 0) - mono(6, 0, 2),  mono(6, 0, 2) + mono(6, 3, 0),
      mono(6, 0, 2) - mono(6, 4, 0),  mono(6, 0, 2) + mono(6, 5, 0),  mono(6, 0, 2),
  };
  const SingularityKind expected[] = {SingularityKind::A1_plus, SingularityKind::A1_minus, SingularityKind::A2,
                                      SingularityKind::A3,      SingularityKind::A4,        SingularityKind::A_infinity_to_cap};
  for (int i = 0; i < 6; ++i) {
    for (int trial = 0; trial < 4; ++trial) {
      Series2 f = random_linear_image(rng, normal_forms[i]);
      f = f * random_unit(rng, 6);
      const SingularityVerdict v = classify_discriminant(f, 6);
      CHECK(v.kind == expected[i]);
      const SingularityVerdict vn = classify_discriminant_numeric(f, 6);
      CHECK(vn.numeric);
      CHECK(vn.kind == expected[i]);
    }
  }
}

TEST_CASE("Morse 2-jets: sign of the verdict follows the Hessian") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    Series2 f = oracle::to_series(oracle::random_poly(rng, 5, -4, 4), 5);
    f.set_coeff(0, 0, 0);
    f.set_coeff(1, 0, 0);
    f.set_coeff(0, 1, 0);
    const Rational h = f.derivative(2, 0) * f.derivative(0, 2) - f.derivative(1, 1) * f.derivative(1, 1);
    const SingularityVerdict v = classify_discriminant(f, 5);
    if (sgn(h) > 0) CHECK(v.kind == SingularityKind::A1_plus);
    if (sgn(h) < 0) CHECK(v.kind == SingularityKind::A1_minus);
    if (sgn(h) == 0) CHECK(v.kind != SingularityKind::A1_plus);
  }
}

TEST_CASE("T3 and T4 agree with the reduced function") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Series2 f = oracle::to_series(oracle::random_poly(rng, 6, -3, 3), 6);
    for (auto [j, k] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}) f.set_coeff(j, k, 0);
    f.set_coeff(0, 2, oracle::random_nonzero(rng, 3, 1));
    if (trial % 2) f.set_coeff(3, 0, 0);
    const Series2 psi = reduced_function(f);
    CHECK(psi.derivative(2, 0) == 0);
    CHECK(psi.derivative(3, 0) == f.derivative(3, 0));
    if (sgn(f.derivative(3, 0)) == 0) {
      // psi_4 = T3 / g02 once g30 = 0.
      CHECK(psi.derivative(4, 0) * f.derivative(0, 2) == t3(f));
    }
  }
}

TEST_CASE("ridge witness on solved jets") {
  for (int m : {3, 4}) {
    UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(1, -m);
    nf.free_coeffs[{Component::p, 3, 0}] = 1;
    const auto [g, report] = solve_jet(nf, 6);
    const RidgeWitness w = ridge_limit_witness(g, 6);
    CHECK(w.found);
    CHECK(w.j == 2);
    CHECK(w.k == 4);
    CHECK(w.value == (m == 3 ? -138240 : -320000));
  }
  const RidgeWitness none = ridge_limit_witness(monomial_family(Rational(5, 2), 0, 8), 20);
  CHECK_FALSE(none.found);
  CHECK(none.searched_through == 6);
}

}  // TEST_SUITE
