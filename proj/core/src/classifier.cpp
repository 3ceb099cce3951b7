#include "wcong/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "wcong/error.hpp"

namespace wcong {

namespace {

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return a * d - b * c; }

// Decides whether a witness vanishes; magnitude is the size of the terms it was summed from.
using ZeroTest = std::function<bool(const Rational&, const Rational&)>;

Rational mag(const Rational& v) { return abs(v); }

// Largest |derivative| of total order n.
Rational order_scale(const Series2& s, int n) {
  Rational out;
  if (n > s.cap()) return out;
  for (int k = 0; k <= n; ++k) out = std::max(out, Rational(abs(s.derivative(n - k, k))));
  return out;
}

Rational g(const Series2& s, int j, int k) { return j + k <= s.cap() ? s.derivative(j, k) : Rational(0); }

SingularityVerdict classify(const Series2& delta, int cap_for_ainf, const ZeroTest& zero) {
  SingularityVerdict v;
  const auto cite = [&v](const std::string& name, const Rational& value) { v.witnesses.push_back({name, value}); };

  if (delta.cap() < 1) throw Error(Errc::insufficient_order, "classify_discriminant: needs cap >= 1");
  const Rational s1 = order_scale(delta, 1);
  if (!zero(g(delta, 0, 0), mag(g(delta, 0, 0))) || !zero(g(delta, 1, 0), s1) || !zero(g(delta, 0, 1), s1)) {
    throw Error(Errc::domain, "origin is not a singular point of delta: g00=" + to_string(g(delta, 0, 0)) +
                                  " g10=" + to_string(g(delta, 1, 0)) + " g01=" + to_string(g(delta, 0, 1)));
  }
  if (delta.cap() < 2) {
    v.diagnostic = "cap too small to read the 2-jet";
    return v;
  }

  const Rational g20 = g(delta, 2, 0), g11 = g(delta, 1, 1), g02 = g(delta, 0, 2);
  const Rational hess = g20 * g02 - g11 * g11;
  cite("g20", g20);
  cite("g11", g11);
  cite("g02", g02);
  cite("hessian_det", hess);
  if (!zero(hess, mag(g20 * g02) + g11 * g11)) {
    v.kind = sgn(hess) > 0 ? SingularityKind::A1_plus : SingularityKind::A1_minus;
    return v;
  }
  const Rational s2 = order_scale(delta, 2);
  if (zero(g20, s2) && zero(g11, s2) && zero(g02, s2)) {
    v.diagnostic = "2-jet vanishes (rank 0)";
    return v;
  }

  // Kernel onto the x-axis.
  Series2 aligned(delta.cap());
  Rational shear = 1;
  if (!zero(g02, s2)) {
    const Rational t = -g11 / g02;
    shear += mag(t);
    v.kernel = std::make_pair(Rational(1), t);
    aligned = substitute(delta, Series2::x(delta.cap()), Series2::y(delta.cap()) + t * Series2::x(delta.cap()));
  } else {
    v.kernel = std::make_pair(Rational(0), Rational(1));
    aligned = substitute(delta, Series2::y(delta.cap()), Series2::x(delta.cap()));
  }
  const double kx = v.kernel->first.get_d(), ky = v.kernel->second.get_d();
  v.kernel_unit = std::make_pair(kx / std::hypot(kx, ky), ky / std::hypot(kx, ky));
  // Entries that are zero by construction (or within tolerance) are set to exactly 0.
  Rational growth = 1;
  for (int n = 0; n <= aligned.cap(); ++n) {
    const Rational scale = order_scale(delta, n) * growth;
    growth *= shear;
    for (int k = 0; k <= n; ++k) {
      if (sgn(aligned.coeff(n - k, k)) != 0 && zero(aligned.derivative(n - k, k), scale)) aligned.set_coeff(n - k, k, 0);
    }
  }
  aligned.set_coeff(2, 0, 0);
  aligned.set_coeff(1, 1, 0);

  const auto need = [&](int order) {
    if (aligned.cap() >= order) return true;
    v.diagnostic = "cap " + std::to_string(aligned.cap()) + " too small for the order-" + std::to_string(order) +
                   " criterion";
    return false;
  };

  if (!need(3)) return v;
  const Rational g30 = aligned.derivative(3, 0);
  cite("g30", g30);
  if (sgn(g30) != 0) {
    v.kind = SingularityKind::A2;
    return v;
  }
  if (!need(4)) return v;
  const Rational T3 = t3(aligned);
  cite("T3", T3);
  if (!zero(T3, mag(g(aligned, 4, 0) * g(aligned, 0, 2)) + 3 * g(aligned, 2, 1) * g(aligned, 2, 1))) {
    v.kind = SingularityKind::A3;
    return v;
  }
  if (!need(5)) return v;
  const Rational T4 = t4(aligned);
  cite("T4", T4);
  const Rational a02 = g(aligned, 0, 2), a21 = g(aligned, 2, 1);
  if (!zero(T4, mag(g(aligned, 5, 0)) * a02 * a02 + 10 * mag(g(aligned, 3, 1) * a21 * a02) +
                    15 * mag(g(aligned, 1, 2)) * a21 * a21)) {
    v.kind = SingularityKind::A4;
    return v;
  }

  const int limit = std::min(cap_for_ainf, aligned.cap());
  const Series2 psi = reduced_function(aligned);
  for (int k = 2; k <= limit; ++k) {
    const Rational value = psi.derivative(k, 0);
    if (zero(value, order_scale(aligned, k) + order_scale(psi, k))) continue;
    cite("psi_" + std::to_string(k), value);
    v.diagnostic = k >= 6 ? "reduced function has order " + std::to_string(k) + " (type A" + std::to_string(k - 1) +
                                ", beyond the A4 chain)"
                          : "reduced function order " + std::to_string(k) + " disagrees with T3/T4";
    return v;
  }
  v.kind = SingularityKind::A_infinity_to_cap;
  v.ainf_cap = limit;
  return v;
}

}  // namespace

bool is_umbilic(const CongruenceGerm& germ) {
  if (germ.cap() < 1) throw Error(Errc::insufficient_order, "is_umbilic: needs cap >= 1");
  return sgn(germ.p(0, 1)) == 0 && sgn(germ.q(1, 0)) == 0 && germ.p(1, 0) == germ.q(0, 1);
}

NondegeneracyReport nondegeneracy(const CongruenceGerm& germ) {
  if (!is_umbilic(germ)) throw Error(Errc::not_umbilic, "nondegeneracy: origin is not umbilical");
  const Rational p20 = germ.p(2, 0), p11 = germ.p(1, 1), p02 = germ.p(0, 2);
  const Rational q20 = germ.q(2, 0), q11 = germ.q(1, 1), q02 = germ.q(0, 2);
  NondegeneracyReport r;
  r.omega = {det2(p20, p11, q20, q11), det2(p11, p02, q11, q02), det2(p20, p02, q20, q02)};
  r.jay = {det2(p20 - q11, p11 - q02, q20, q11), det2(p20 - q11, p11 - q02, p11, p02), det2(p11, p02, q20, q11)};
  for (int i = 0; i < 3; ++i) {
    if (sgn(r.omega[i]) != 0 && sgn(r.jay[i]) != 0) r.nondegenerate = true;
  }
  return r;
}

const char* to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::A1_plus: return "A1_plus";
    case SingularityKind::A1_minus: return "A1_minus";
    case SingularityKind::A2: return "A2";
    case SingularityKind::A3: return "A3";
    case SingularityKind::A4: return "A4";
    case SingularityKind::A_infinity_to_cap: return "A_infinity_to_cap";
    case SingularityKind::unresolved: return "unresolved";
  }
  return "unknown";
}

std::string SingularityVerdict::label() const {
  if (kind == SingularityKind::A_infinity_to_cap) return "A_infinity_to_cap(" + std::to_string(ainf_cap) + ")";
  return to_string(kind);
}

const Rational* SingularityVerdict::witness(const std::string& name) const {
  for (const auto& w : witnesses) {
    if (w.name == name) return &w.value;
  }
  return nullptr;
}

SingularityVerdict classify_discriminant(const Series2& delta, int cap_for_ainf) {
  return classify(delta, cap_for_ainf, [](const Rational& value, const Rational&) { return sgn(value) == 0; });
}

SingularityVerdict classify_discriminant_numeric(const Series2& delta, int cap_for_ainf) {
  Series2 rounded(delta.cap());
  for (int n = 0; n <= delta.cap(); ++n) {
    for (int k = 0; k <= n; ++k) rounded.set_coeff(n - k, k, Rational(delta.coeff(n - k, k).get_d()));
  }
  const ZeroTest zero = [](const Rational& value, const Rational& magnitude) {
    return std::fabs(value.get_d()) <= 1e-9 * magnitude.get_d();
  };
  SingularityVerdict v = classify(rounded, cap_for_ainf, zero);
  v.numeric = true;
  return v;
}

std::optional<Series2> kernel_aligned(const Series2& delta) {
  if (delta.cap() < 2) return std::nullopt;
  const Rational g20 = delta.derivative(2, 0), g11 = delta.derivative(1, 1), g02 = delta.derivative(0, 2);
  if (sgn(g20 * g02 - g11 * g11) != 0) return std::nullopt;
  if (sgn(g20) == 0 && sgn(g11) == 0 && sgn(g02) == 0) return std::nullopt;
  const int cap = delta.cap();
  if (sgn(g02) != 0) return substitute(delta, Series2::x(cap), Series2::y(cap) - Rational(g11 / g02) * Series2::x(cap));
  return substitute(delta, Series2::y(cap), Series2::x(cap));
}

Rational t3(const Series2& a) { return g(a, 4, 0) * g(a, 0, 2) - 3 * g(a, 2, 1) * g(a, 2, 1); }

Rational t4(const Series2& a) {
  const Rational g02 = g(a, 0, 2), g21 = g(a, 2, 1);
  return g(a, 5, 0) * g02 * g02 - 10 * g(a, 3, 1) * g21 * g02 + 15 * g(a, 1, 2) * g21 * g21;
}

Series2 reduced_function(const Series2& aligned) {
  const int cap = aligned.cap();
  const Rational g02 = g(aligned, 0, 2);
  if (sgn(g02) == 0) throw Error(Errc::precondition, "reduced_function: g02 must be nonzero");
  const Series2 gy = diff(aligned, 0, 1);
  const int ycap = gy.cap();
  const Series2 x = Series2::x(ycap);
  // Y <- Y - g_y(x, Y) / g02 gains one order per pass.
  Series2 Y(ycap);
  for (int pass = 0; pass <= ycap; ++pass) Y -= Rational(1 / g02) * substitute(gy, x, Y);
  return substitute(aligned, Series2::x(cap), Y.padded(cap));
}

RidgeWitness ridge_limit_witness(const CongruenceGerm& germ, int max_order) {
  const Series2 R = ridge_invariants(germ).R;
  RidgeWitness w;
  w.searched_through = std::min(max_order, R.cap());
  for (int n = 0; n <= w.searched_through; ++n) {
    for (int j = 0; j <= n; ++j) {
      const Rational value = R.derivative(j, n - j);
      if (sgn(value) != 0) {
        w.found = true;
        w.j = j;
        w.k = n - j;
        w.value = value;
        return w;
      }
    }
  }
  return w;
}

}  // namespace wcong
