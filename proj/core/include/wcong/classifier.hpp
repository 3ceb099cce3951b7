#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcong/congruence.hpp"

namespace wcong {

/// a = d and b = c = 0 at the origin.
bool is_umbilic(const CongruenceGerm& germ);

struct NondegeneracyReport {
  std::array<Rational, 3> omega;
  std::array<Rational, 3> jay;
  bool nondegenerate = false;
};

/// Throws Errc::not_umbilic when the origin is not umbilical.
NondegeneracyReport nondegeneracy(const CongruenceGerm& germ);

enum class SingularityKind { A1_plus, A1_minus, A2, A3, A4, A_infinity_to_cap, unresolved };

const char* to_string(SingularityKind kind);

struct Witness {
  std::string name;
  Rational value;
};

struct SingularityVerdict {
  SingularityKind kind = SingularityKind::unresolved;
  /// Order through which the reduced germ vanishes (A_infinity_to_cap only).
  int ainf_cap = 0;
  std::vector<Witness> witnesses;
  /// Hessian kernel when the 2-jet has rank 1: exact vector and unit vector.
  std::optional<std::pair<Rational, Rational>> kernel;
  std::optional<std::pair<double, double>> kernel_unit;
  std::string diagnostic;
  bool numeric = false;

  /// "A3", "A_infinity_to_cap(7)", ...
  std::string label() const;
  const Rational* witness(const std::string& name) const;
};

/// Classifies the singular point of delta at the origin. The A_infinity check
/// runs through min(cap_for_ainf, delta.cap()). Throws Errc::domain when the
/// origin is not a singular point.
SingularityVerdict classify_discriminant(const Series2& delta, int cap_for_ainf);

/// Same ladder with floating zero tests at relative tolerance 1e-9; the
/// verdict is flagged numeric.
SingularityVerdict classify_discriminant_numeric(const Series2& delta, int cap_for_ainf);

struct RidgeWitness {
  bool found = false;
  int j = 0;
  int k = 0;
  Rational value;
  /// Highest order inspected.
  int searched_through = 0;
};

/// First nonvanishing R_{jk}(0) ordered by total degree, then by j.
RidgeWitness ridge_limit_witness(const CongruenceGerm& germ, int max_order);

/// Coefficients of delta after moving the Hessian kernel onto the x-axis:
/// y -> y - (g11/g02) x when g02 != 0, otherwise x <-> y. Returns nullopt
/// unless the 2-jet has rank 1.
std::optional<Series2> kernel_aligned(const Series2& delta);

/// T3 = g40 g02 - 3 g21^2 on a kernel-aligned germ.
Rational t3(const Series2& aligned);
/// T4 = g50 g02^2 - 10 g31 g21 g02 + 15 g12 g21^2 on a kernel-aligned germ.
Rational t4(const Series2& aligned);

/// psi(x) = g(x, Y(x)) with g_y(x, Y(x)) = 0, as a series in x (y-degree 0),
/// for a kernel-aligned germ. Known through g.cap().
Series2 reduced_function(const Series2& aligned);

}  // namespace wcong
