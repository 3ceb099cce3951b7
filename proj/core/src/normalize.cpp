#include <string>
#include <vector>

#include "wcong/classifier.hpp"
#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"
#include "wcong/roots.hpp"

namespace wcong {

namespace {

using Vec = std::pair<Rational, Rational>;

// Symmetric trilinear form of the binary cubic C(v) = det(v, Q(v)).
struct Cubic {
  Rational t[4];  // T_000, T_001, T_011, T_111

  Rational operator()(const Vec& u, const Vec& v, const Vec& w) const {
    const Rational* uu[2] = {&u.first, &u.second};
    const Rational* vv[2] = {&v.first, &v.second};
    const Rational* ww[2] = {&w.first, &w.second};
    Rational acc(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) acc += t[i + j + k] * *uu[i] * *vv[j] * *ww[k];
    return acc;
  }
  Rational operator()(const Vec& v) const { return (*this)(v, v, v); }
  bool is_zero() const { return sgn(t[0]) == 0 && sgn(t[1]) == 0 && sgn(t[2]) == 0 && sgn(t[3]) == 0; }
};

Rational cross(const Vec& u, const Vec& v) { return u.first * v.second - u.second * v.first; }

// Primitive integer multiple with positive leading entry.
Vec primitive(const Vec& v) {
  Integer den(1);
  mpz_lcm(den.get_mpz_t(), v.first.get_den_mpz_t(), v.second.get_den_mpz_t());
  Integer a(v.first * den);
  Integer b(v.second * den);
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g == 0) return v;
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {Rational(a), Rational(b)};
}

// A coordinate axis not parallel to v.
Vec transversal(const Vec& v) { return sgn(v.first) != 0 ? Vec{0, 1} : Vec{1, 0}; }

bool definite(const Rational& f20, const Rational& f11, const Rational& f02) { return f11 * f11 - f20 * f02 < 0; }

struct Candidate {
  Vec e1, e2;
};

std::vector<Candidate> candidates(const CongruenceGerm& g, std::string& obstruction) {
  const Rational l1 = g.p(2, 0) + g.q(1, 1);
  const Rational l2 = g.p(1, 1) + g.q(0, 2);
  Cubic C;
  C.t[0] = g.q(2, 0) / 2;
  C.t[1] = (g.q(1, 1) - g.p(2, 0) / 2) / 3;
  C.t[2] = (g.q(0, 2) / 2 - g.p(1, 1)) / 3;
  C.t[3] = -g.p(0, 2) / 2;

  std::vector<Candidate> out;
  if (sgn(l1) != 0 || sgn(l2) != 0) {
    const Vec e1 = primitive({l2, -l1});
    const Vec phi{C(e1, e1, {1, 0}), C(e1, e1, {0, 1})};
    if (sgn(phi.first) != 0 || sgn(phi.second) != 0) {
      const Vec e2 = primitive({phi.second, -phi.first});
      if (sgn(cross(e1, e2)) == 0) {
        obstruction = "the kernel of div Q is a triple asymptotic direction";
      } else {
        out.push_back({e1, e2});
      }
    } else if (C.is_zero()) {
      out.push_back({e1, transversal(e1)});
    } else {
      const Vec f = transversal(e1);
      const Rational alpha = 3 * C(e1, f, f);
      const Rational beta = C(f);
      if (sgn(alpha) == 0) {
        obstruction = "the kernel of div Q is a triple asymptotic direction";
      } else {
        out.push_back({e1, primitive({-beta * e1.first + alpha * f.first, -beta * e1.second + alpha * f.second})});
      }
    }
    return out;
  }

  if (C.is_zero()) {
    obstruction = "the quadratic part vanishes";
    return out;
  }
  // div Q = 0: e2 runs over the rational roots of C.
  std::vector<Vec> roots;
  if (sgn(C.t[3]) == 0) roots.push_back({0, 1});
  if (sgn(C.t[0]) == 0) roots.push_back({1, 0});
  const Poly in_x{C.t[3], 3 * C.t[2], 3 * C.t[1], C.t[0]};  // C(x, 1)
  if (degree(in_x) >= 1) {
    for (const auto& r : rational_roots(in_x)) {
      if (sgn(r) != 0) roots.push_back(primitive({r, 1}));
    }
  }
  for (const auto& r : roots) {
    const Vec f = transversal(r);
    const Rational a = C(r, r, f);
    const Rational b = C(f, f, r);
    if (sgn(a) != 0) {
      out.push_back({primitive({-b * r.first + 2 * a * f.first, -b * r.second + 2 * a * f.second}), r});
    } else if (sgn(b) == 0) {
      out.push_back({f, r});
    }
  }
  if (out.empty()) obstruction = "no rational asymptotic frame (irrational directions)";
  return out;
}

// Empty string when g is in normal form, otherwise the failed condition.
std::string normal_form_violation(const CongruenceGerm& g) {
  if (sgn(g.p(2, 0)) != 0 || sgn(g.p(0, 2)) != 0) return "p20 or p02 nonzero after alignment (first-order W equations fail)";
  if (sgn(g.q(1, 1)) != 0) return "q11 != 0 after alignment (W_y(0) != 0)";
  if (sgn(g.p(1, 1)) == 0) return "p11 = 0";
  if (sgn(g.q(0, 2)) == 0) return "q02 = 0";
  if (g.p(1, 1) == g.q(0, 2)) return "p11 = q02 (degenerate umbilic)";
  if (g.p(1, 1) + g.q(0, 2) != 0 && sgn(g.q(2, 0)) != 0) return "q20 != 0 with m != 1 (W_x(0) != 0)";
  return {};
}

}  // namespace

UmbilicNormalForm UmbilicNormalForm::from_two_jet(const Rational& p11, const Rational& q02) {
  if (sgn(p11) == 0 || sgn(q02) == 0) throw Error(Errc::precondition, "normal form needs p11 != 0 and q02 != 0");
  if (p11 == q02) throw Error(Errc::precondition, "normal form needs p11 != q02");
  UmbilicNormalForm nf;
  nf.p11 = p11;
  nf.q02 = q02;
  nf.m = -q02 / p11;
  return nf;
}

CongruenceGerm apply_linear_change(const CongruenceGerm& germ, const Matrix2& L) {
  const Rational det = L[0] * L[3] - L[1] * L[2];
  if (sgn(det) == 0) throw Error(Errc::precondition, "linear change is singular");
  const int cap = germ.cap();
  const Series2 X = L[0] * Series2::x(cap) + L[1] * Series2::y(cap);
  const Series2 Y = L[2] * Series2::x(cap) + L[3] * Series2::y(cap);
  const Series2 f1 = substitute(germ.xi1, X, Y);
  const Series2 f2 = substitute(germ.xi2, X, Y);
  return {Rational(L[3] / det) * f1 - Rational(L[1] / det) * f2, Rational(-L[2] / det) * f1 + Rational(L[0] / det) * f2};
}

std::pair<CongruenceGerm, UmbilicNormalForm> normalize_umbilic(const CongruenceGerm& germ) {
  if (germ.cap() < 2) throw Error(Errc::insufficient_order, "normalize_umbilic: needs cap >= 2");
  if (!is_umbilic(germ)) {
    throw Error(Errc::not_umbilic, "origin is not umbilical: p10=" + to_string(germ.p(1, 0)) + " p01=" +
                                       to_string(germ.p(0, 1)) + " q10=" + to_string(germ.q(1, 0)) +
                                       " q01=" + to_string(germ.q(0, 1)));
  }
  if (definite(germ.p(2, 0), germ.p(1, 1), germ.p(0, 2)) && definite(germ.q(2, 0), germ.q(1, 1), germ.q(0, 2))) {
    throw Error(Errc::normalization, "normalization impossible: both quadratic parts are definite");
  }

  const int cap = germ.cap();
  const Rational lambda = germ.p(1, 0);
  CongruenceGerm base{germ.xi1 - Series2::constant(cap, germ.xi1.constant_term()) - lambda * Series2::x(cap),
                      germ.xi2 - Series2::constant(cap, germ.xi2.constant_term()) - lambda * Series2::y(cap)};

  std::string obstruction;
  const auto frames = candidates(base, obstruction);
  for (const auto& [e1, e2] : frames) {
    const Matrix2 L{e1.first, e2.first, e1.second, e2.second};
    CongruenceGerm normal = apply_linear_change(base, L);
    const std::string violation = normal_form_violation(normal);
    if (!violation.empty()) {
      if (obstruction.empty()) obstruction = violation;
      continue;
    }
    UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(normal.p(1, 1), normal.q(0, 2));
    nf.linear_change = L;
    nf.removed_constant = {germ.xi1.constant_term(), germ.xi2.constant_term()};
    nf.removed_lambda = lambda;
    for (Component comp : {Component::p, Component::q}) {
      for (int n = 2; n <= cap; ++n) {
        for (int k = 0; k <= n; ++k) {
          const Slot slot{comp, n - k, k};
          const SlotRole role = slot_role(nf.m, slot);
          if (role == SlotRole::free) nf.free_coeffs[slot] = get_slot(normal, slot);
          if (role == SlotRole::dependent) nf.dependent_coeffs[slot] = get_slot(normal, slot);
        }
      }
    }
    return {std::move(normal), std::move(nf)};
  }
  throw Error(Errc::normalization, "normalization impossible: " + obstruction);
}

}  // namespace wcong
