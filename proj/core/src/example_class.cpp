#include <string>

#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"

namespace wcong {

bool ExampleClassReport::all_zero() const {
  return sgn(wn0_residual) == 0 && (!wn1_residual || sgn(*wn1_residual) == 0) && sgn(delta_n0_residual) == 0 &&
         sgn(delta_n1_residual) == 0;
}

ExampleClassReport example_class_checks(const CongruenceGerm& germ, const UmbilicNormalForm& normal, int n) {
  if (n < 2) throw Error(Errc::precondition, "example_class_checks: needs n >= 2");
  if (germ.cap() < n + 2) throw Error(Errc::insufficient_order, "example_class_checks: needs cap >= n + 2");

  std::string offending;
  for (int j = 1; j <= germ.cap(); ++j) {
    if (sgn(germ.p(j, 0)) != 0) offending += " p" + std::to_string(j) + "0=" + to_string(germ.p(j, 0));
  }
  if (!offending.empty()) throw Error(Errc::class_violation, "germ outside the p_{j0} = 0 class:" + offending);

  const Rational& p11 = normal.p11;
  const Rational& q02 = normal.q02;
  std::string failed;
  if (germ.p(1, 1) != p11 || germ.q(0, 2) != q02) failed += " 2-jet differs from the normal form;";
  if (sgn(germ.p(0, 1)) != 0 || sgn(germ.p(0, 2)) != 0) failed += " p01/p02 != 0;";
  if (sgn(germ.q(1, 0)) != 0 || sgn(germ.q(0, 1)) != 0) failed += " q10/q01 != 0;";
  for (int j = 2; j <= n; ++j) {
    if (sgn(germ.q(j, 0)) != 0) failed += " q" + std::to_string(j) + "0 != 0;";
    if (sgn(germ.q(j - 1, 1)) != 0) failed += " q" + std::to_string(j - 1) + "1 != 0;";
  }
  if (!failed.empty()) throw Error(Errc::precondition, "order-" + std::to_string(n) + " hypotheses fail:" + failed);

  const CongruenceGerm g = germ.truncated(n + 2);
  const Series2 w = w_series(g);
  const Series2 delta = discriminant(g);
  const Rational qn1 = germ.q(n, 1);
  const Rational qn10 = germ.q(n + 1, 0);

  ExampleClassReport report;
  report.n = n;
  report.wn0_residual = w.derivative(n, 0) - 2 * p11 * (q02 + n * p11) * qn10;
  if (sgn(qn10) == 0) report.wn1_residual = w.derivative(n - 1, 1) - 2 * p11 * (q02 + (n - 1) * p11) * qn1;
  report.delta_n0_residual = delta.derivative(n + 1, 0) - 4 * (n + 1) * p11 * qn10;
  report.delta_n1_residual = delta.derivative(n, 1) - 2 * (2 * n - normal.m - 1) * p11 * qn1;
  return report;
}

}  // namespace wcong
