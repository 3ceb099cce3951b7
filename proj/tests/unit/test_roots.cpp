#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "wcong/error.hpp"
#include "wcong/roots.hpp"

using namespace wcong;

namespace {

Poly from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  Poly p{lead};
  for (const Rational& r : roots) {
    Poly next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = next;
  }
  return p;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("degree and evaluation") {
  CHECK(degree({}) == -1);
  CHECK(degree({0, 0}) == -1);
  CHECK(degree({1, 2, 0}) == 1);
  CHECK(evaluate(Poly{1, 0, 3}, Rational(2)) == 13);
  CHECK(evaluate(Poly{1, 0, 3}, 0.5) == doctest::Approx(1.75));
}

TEST_CASE("gcd") {
  const Poly a = from_roots({1, 2, Rational(-1, 3)}, 6);
  const Poly b = from_roots({2, Rational(-1, 3), 5}, -2);
  const Poly g = gcd(a, b);
  CHECK(degree(g) == 2);
  CHECK(g[2] == 1);
  CHECK(evaluate(g, Rational(2)) == 0);
  CHECK(evaluate(g, Rational(-1, 3)) == 0);
  CHECK(degree(gcd(Poly{1, 1}, Poly{2, 1})) == 0);
  CHECK(gcd(Poly{}, Poly{0}).empty());
  CHECK(gcd(Poly{}, Poly{3, 6}) == Poly{Rational(1, 2), 1});
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(from_roots({Rational(2, 3), -5, Rational(2, 3)}, 9)) ==
        std::vector<Rational>{-5, Rational(2, 3)});
  CHECK(rational_roots(Poly{-2, 0, 1}).empty());  // sqrt 2
  CHECK(rational_roots(Poly{0, 0, 1}) == std::vector<Rational>{0});
  CHECK(rational_roots(Poly{7}).empty());
  CHECK_THROWS_AS(rational_roots(Poly{0, 0}), Error);
}

TEST_CASE("real roots") {
  const std::vector<double> r = real_roots(Poly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(real_roots(Poly{1, 0, 1}).empty());
  CHECK(real_roots(from_roots({1, 1, 1}, 1)) == std::vector<double>{1.0});
  CHECK_THROWS_AS(real_roots(Poly{}), Error);
}

TEST_CASE("real roots of random products recover every factor") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> roots;
    const int n = 1 + trial % 5;
    for (int i = 0; i < n; ++i) roots.push_back(oracle::random_rational(rng, 20, 7));
    Poly p = from_roots(roots, oracle::random_nonzero(rng, 5, 1));
    // An irreducible quadratic factor adds no real roots.
    Poly q(p.size() + 2, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += 3 * p[i];
      q[i + 2] += p[i];
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const std::vector<double> found = real_roots(q);
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(found[i] == doctest::Approx(roots[i].get_d()).epsilon(1e-12));
    CHECK(rational_roots(q) == roots);
  }
}

}  // TEST_SUITE
