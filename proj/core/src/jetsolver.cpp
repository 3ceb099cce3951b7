#include <string>
#include <vector>

#include "wcong/error.hpp"
#include "wcong/jetsolver.hpp"

namespace wcong {

namespace {

std::string eq_name(int i, int k) { return "W_{" + std::to_string(i) + "," + std::to_string(k) + "}"; }

struct Equation {
  int i, k;
  Slot unknown;
};

std::vector<Rational> residuals(const CongruenceGerm& germ, int n, const std::vector<Equation>& eqs) {
  const Series2 w = w_series(germ.truncated(n + 2));
  std::vector<Rational> out;
  out.reserve(eqs.size());
  for (const auto& e : eqs) out.push_back(w.derivative(e.i, e.k));
  return out;
}

}  // namespace

std::pair<CongruenceGerm, JetSolveReport> solve_jet(const UmbilicNormalForm& normal, int target_order) {
  if (target_order < 0) throw Error(Errc::precondition, "solve_jet: negative target order");
  if (sgn(normal.p11) == 0 || sgn(normal.q02) == 0 || normal.p11 == normal.q02 ||
      normal.m != -normal.q02 / normal.p11) {
    throw Error(Errc::precondition, "solve_jet: inconsistent normal form (p11, q02, m)");
  }
  const Rational& m = normal.m;
  const int cap = target_order + 2;

  CongruenceGerm germ{Series2(cap), Series2(cap)};
  set_slot(germ, {Component::p, 1, 1}, normal.p11);
  set_slot(germ, {Component::q, 0, 2}, normal.q02);
  for (const auto& [slot, value] : normal.free_coeffs) {
    if (slot_role(m, slot) != SlotRole::free) {
      throw Error(Errc::precondition, "solve_jet: " + to_string(slot) + " is not a free slot");
    }
    if (slot.order() > cap) {
      throw Error(Errc::precondition, "solve_jet: " + to_string(slot) + " lies above cap " + std::to_string(cap));
    }
    set_slot(germ, slot, value);
  }

  JetSolveReport report;
  for (int n = 1; n <= target_order; ++n) {
    std::vector<Equation> eqs;
    std::optional<int> skipped;
    for (int k = 0; k <= n; ++k) {
      const auto unknown = equation_unknown(m, n - k, k);
      if (!unknown) {
        skipped = k;
        continue;
      }
      eqs.push_back({n - k, k, *unknown});
    }

    // Each W_{i,k}(0) at order n is affine in the order n + 1 unknowns: probe
    // at 0 and at each unit vector, then solve exactly.
    const std::size_t size = eqs.size();
    for (const auto& e : eqs) set_slot(germ, e.unknown, Rational(0));
    const std::vector<Rational> base = residuals(germ, n, eqs);
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1));
    for (std::size_t c = 0; c < size; ++c) {
      set_slot(germ, eqs[c].unknown, Rational(1));
      const std::vector<Rational> probe = residuals(germ, n, eqs);
      set_slot(germ, eqs[c].unknown, Rational(0));
      for (std::size_t r = 0; r < size; ++r) a[r][c] = probe[r] - base[r];
    }
    for (std::size_t r = 0; r < size; ++r) a[r][size] = -base[r];
    std::vector<Rational> slopes(size);
    for (std::size_t r = 0; r < size; ++r) slopes[r] = a[r][r];

    // Gauss-Jordan, preferring each equation's own unknown as its pivot.
    std::vector<int> pivot_of_row(size, -1);
    std::vector<bool> pivot_col(size, false);
    for (std::size_t r = 0; r < size; ++r) {
      int pc = -1;
      if (!pivot_col[r] && sgn(a[r][r]) != 0) pc = static_cast<int>(r);
      for (std::size_t c = 0; pc < 0 && c < size; ++c) {
        if (!pivot_col[c] && sgn(a[r][c]) != 0) pc = static_cast<int>(c);
      }
      if (pc < 0) {
        if (sgn(a[r][size]) != 0) {
          throw Error(Errc::solver, "inconsistent jet equation " + eq_name(eqs[r].i, eqs[r].k) + " (n=" +
                                        std::to_string(n) + ", k=" + std::to_string(eqs[r].k) + ")");
        }
        continue;
      }
      const auto c = static_cast<std::size_t>(pc);
      pivot_of_row[r] = pc;
      pivot_col[c] = true;
      const Rational inv = 1 / a[r][c];
      for (auto& v : a[r]) v *= inv;
      for (std::size_t o = 0; o < size; ++o) {
        if (o == r || sgn(a[o][c]) == 0) continue;
        const Rational f = a[o][c];
        for (std::size_t t = 0; t <= size; ++t) a[o][t] -= f * a[r][t];
      }
    }
    for (std::size_t c = 0; c < size; ++c) {
      if (!pivot_col[c]) report.extra_free_slots.push_back(eqs[c].unknown);
    }
    for (std::size_t r = 0; r < size; ++r) {
      if (pivot_of_row[r] >= 0) set_slot(germ, eqs[static_cast<std::size_t>(pivot_of_row[r])].unknown, a[r][size]);
    }

    const std::vector<Rational> check = residuals(germ, n, eqs);
    for (std::size_t r = 0; r < size; ++r) {
      if (sgn(check[r]) != 0) {
        throw Error(Errc::consistency, "jet equation " + eq_name(eqs[r].i, eqs[r].k) + " is not affine in its unknowns");
      }
    }
    for (std::size_t r = 0; r < size; ++r) {
      report.equations_used.push_back({eqs[r].i, eqs[r].k, eqs[r].unknown, slopes[r], get_slot(germ, eqs[r].unknown)});
    }
    if (skipped) report.wm0_residual = w_series(germ.truncated(n + 2)).derivative(n - *skipped, *skipped);
    report.order_reached = n;
  }
  return {std::move(germ), std::move(report)};
}

Rational check_wm0(const UmbilicNormalForm& normal, const CongruenceGerm& germ) {
  if (!is_natural(normal.m)) throw Error(Errc::not_applicable, "W_{m0} needs a positive integer m, got " + to_string(normal.m));
  const int m = static_cast<int>(normal.m.get_num().get_si());
  if (germ.cap() < m + 2) throw Error(Errc::insufficient_order, "check_wm0: needs cap >= m + 2");
  return w_series(germ.truncated(m + 2)).derivative(m, 0);
}

CongruenceGerm monomial_family(const Rational& m, const Rational& C, int cap) {
  const bool natural = is_natural(m);
  if (!natural && sgn(C) != 0) throw Error(Errc::precondition, "monomial_family: C must be 0 for non-integral m");
  if (cap < 2) throw Error(Errc::precondition, "monomial_family: needs cap >= 2");
  CongruenceGerm germ{Series2::monomial(cap, 1, 1), Series2::monomial(cap, 0, 2, Rational(-m / 2))};
  if (natural) {
    const int e = static_cast<int>(m.get_num().get_si()) + 1;
    if (cap < e) throw Error(Errc::precondition, "monomial_family: needs cap >= m + 1");
    germ.xi2.set_coeff(e, 0, C);
  }
  return germ;
}

}  // namespace wcong
