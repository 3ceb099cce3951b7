#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcong/congruence.hpp"

namespace wcong {

/// p = xi1, q = xi2.
enum class Component { p, q };

/// A Taylor slot p_{jk} or q_{jk} (derivative convention).
struct Slot {
  Component comp = Component::p;
  int j = 0;
  int k = 0;

  int order() const { return j + k; }
  auto operator<=>(const Slot&) const = default;
};

std::string to_string(const Slot& slot);

Rational get_slot(const CongruenceGerm& germ, const Slot& slot);
void set_slot(CongruenceGerm& germ, const Slot& slot, const Rational& value);

enum class SlotRole {
  fixed,      // fixed by the normalized 2-jet
  free,       // chosen freely
  dependent,  // determined by a jet equation
};

/// Role of a slot at a normalized umbilic with parameter m.
SlotRole slot_role(const Rational& m, const Slot& slot);

/// The unknown solved by the jet equation W_{i,k}(0) = 0, or nullopt for the
/// slot (m, 0) whose value is reported instead. Requires i + k >= 1.
std::optional<Slot> equation_unknown(const Rational& m, int i, int k);

/// Free slots of total order 2 through max_order, ordered by component, then order, then k.
std::vector<Slot> free_slots(const Rational& m, int max_order);

/// Row-major 2x2 rational matrix.
using Matrix2 = std::array<Rational, 4>;

struct UmbilicNormalForm {
  Rational p11;
  Rational q02;
  Rational m;
  /// x = L x' with xi' = L^{-1} xi(L x'); identity when the input was already normal.
  Matrix2 linear_change{Rational(1), Rational(0), Rational(0), Rational(1)};
  /// xi(0) removed before the change.
  std::pair<Rational, Rational> removed_constant{};
  /// lambda in xi -> xi - lambda (x, y), with lambda = p10 = q01.
  Rational removed_lambda;
  std::map<Slot, Rational> free_coeffs;
  std::map<Slot, Rational> dependent_coeffs;

  /// Normal form with the given 2-jet data and no free values yet.
  static UmbilicNormalForm from_two_jet(const Rational& p11, const Rational& q02);
};

/// Brings the 2-jet of a non-degenerate umbilic into normal form
/// p20 = p02 = q11 = 0, p11 != 0, q02 != 0 by a rational change of plane
/// coordinates. Free coefficients of the result are copied into the report.
/// Throws Errc::not_umbilic or Errc::normalization naming the obstruction.
std::pair<CongruenceGerm, UmbilicNormalForm> normalize_umbilic(const CongruenceGerm& germ);

/// Applies x = L x', xi' = L^{-1} xi(L x').
CongruenceGerm apply_linear_change(const CongruenceGerm& germ, const Matrix2& L);

struct SolvedEquation {
  int i = 0;  // equation W_{i,k}(0) = 0
  int k = 0;
  Slot unknown;
  Rational slope;  // coefficient of the unknown in its own equation
  Rational value;
};

struct JetSolveReport {
  int order_reached = 0;
  std::vector<SolvedEquation> equations_used;
  /// Dependent slots whose equation had zero slope and zero intercept.
  std::vector<Slot> extra_free_slots;
  /// W_{m0}(0) once every other equation up to order m is imposed.
  std::optional<Rational> wm0_residual;
};

/// Solves W_{i,k}(0) = 0 for i + k <= target_order. The returned germ has cap
/// target_order + 2; free slots take the values in normal.free_coeffs
/// (missing entries are 0) and dependent slots above order target_order + 1
/// are left at 0.
std::pair<CongruenceGerm, JetSolveReport> solve_jet(const UmbilicNormalForm& normal, int target_order);

/// Exact W_{m0}(0). Throws Errc::not_applicable unless m is a positive integer.
Rational check_wm0(const UmbilicNormalForm& normal, const CongruenceGerm& germ);

/// xi1 = xy, xi2 = -(m/2) y^2 + C x^{m+1} (the last term only for integral m).
CongruenceGerm monomial_family(const Rational& m, const Rational& C, int cap);

struct ExampleClassReport {
  int n = 0;
  Rational wn0_residual;                 // W_{n0} - 2 p11 (q02 + n p11) q_{n+1,0}
  std::optional<Rational> wn1_residual;  // W_{n-1,1} - 2 p11 (q02 + (n-1) p11) q_{n1}, when q_{n+1,0} = 0
  Rational delta_n0_residual;            // delta_{n+1,0} - 4 (n+1) p11 q_{n+1,0}
  Rational delta_n1_residual;            // delta_{n1} - 2 (2n - m - 1) p11 q_{n1}

  bool all_zero() const;
};

/// Evaluates the order-n identities of the p_{j0} = 0 example class.
/// Throws Errc::class_violation when some p_{j0} != 0 and
/// Errc::precondition when the order-n induction hypotheses fail.
ExampleClassReport example_class_checks(const CongruenceGerm& germ, const UmbilicNormalForm& normal, int n);

}  // namespace wcong
