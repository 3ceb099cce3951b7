#include "wcong/series.hpp"

#include <algorithm>
#include <string>

#include "wcong/error.hpp"

namespace wcong {

namespace {

void require_same_cap(const Series2& f, const Series2& g, const char* op) {
  if (f.cap() != g.cap()) {
    throw Error(Errc::structural, std::string(op) + ": cap mismatch (" + std::to_string(f.cap()) + " vs " +
                                      std::to_string(g.cap()) + ")");
  }
}

// j!/(j-r)!
Integer falling(int j, int r) {
  Integer out(1);
  for (int i = 0; i < r; ++i) out *= j - i;
  return out;
}

}  // namespace

Series2::Series2(int cap) : cap_(cap) {
  if (cap < 0) throw Error(Errc::structural, "negative cap");
  coeffs_.resize(index(0, cap) + 1);
}

Series2 Series2::constant(int cap, const Rational& value) {
  Series2 out(cap);
  out.coeffs_[0] = value;
  return out;
}

Series2 Series2::monomial(int cap, int j, int k, const Rational& coeff) {
  Series2 out(cap);
  out.set_coeff(j, k, coeff);
  return out;
}

void Series2::check_slot(int j, int k) const {
  if (j < 0 || k < 0 || j + k > cap_) {
    throw Error(Errc::structural, "coefficient (" + std::to_string(j) + "," + std::to_string(k) +
                                      ") outside cap " + std::to_string(cap_));
  }
}

const Rational& Series2::coeff(int j, int k) const {
  check_slot(j, k);
  return coeffs_[index(j, k)];
}

void Series2::set_coeff(int j, int k, const Rational& value) {
  check_slot(j, k);
  coeffs_[index(j, k)] = value;
}

Rational Series2::derivative(int j, int k) const {
  return Rational(coeff(j, k) * factorial(j) * factorial(k));
}

void Series2::set_derivative(int j, int k, const Rational& value) {
  set_coeff(j, k, Rational(value / (factorial(j) * factorial(k))));
}

bool Series2::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int Series2::order() const {
  for (int n = 0; n <= cap_; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (sgn(coeffs_[index(n - k, k)]) != 0) return n;
    }
  }
  return -1;
}

Series2 Series2::truncated(int new_cap) const {
  if (new_cap > cap_) throw Error(Errc::structural, "truncated: new cap exceeds cap");
  Series2 out(new_cap);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

Series2 Series2::padded(int new_cap) const {
  if (new_cap < cap_) throw Error(Errc::structural, "padded: new cap below cap");
  Series2 out(new_cap);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
  return out;
}

double Series2::evaluate(double x, double y) const {
  double total = 0.0;
  for (int j = cap_; j >= 0; --j) {
    double inner = 0.0;
    for (int k = cap_ - j; k >= 0; --k) inner = inner * y + coeffs_[index(j, k)].get_d();
    total = total * x + inner;
  }
  return total;
}

Series2& Series2::operator+=(const Series2& other) {
  require_same_cap(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Series2& Series2::operator-=(const Series2& other) {
  require_same_cap(*this, other, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Series2& Series2::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series2 operator*(const Series2& f, const Series2& g) {
  require_same_cap(f, g, "multiply");
  const int cap = f.cap();
  Series2 out(cap);
  Rational acc;
  for (int n = 0; n <= cap; ++n) {
    for (int k = 0; k <= n; ++k) {
      acc = 0;
      const int j = n - k;
      for (int a = 0; a <= j; ++a) {
        for (int b = 0; b <= k; ++b) {
          const Rational& fc = f.coeff(a, b);
          if (sgn(fc) == 0) continue;
          const Rational& gc = g.coeff(j - a, k - b);
          if (sgn(gc) == 0) continue;
          acc += fc * gc;
        }
      }
      out.set_coeff(j, k, acc);
    }
  }
  return out;
}

Series2 diff(const Series2& f, int jx, int ky) {
  if (jx < 0 || ky < 0) throw Error(Errc::structural, "diff: negative order");
  const int cap = std::max(f.cap() - jx - ky, 0);
  Series2 out(cap);
  for (int n = 0; n <= f.cap() - jx - ky; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int j = n - k;
      const Rational& c = f.coeff(j + jx, k + ky);
      if (sgn(c) == 0) continue;
      out.set_coeff(j, k, Rational(c * falling(j + jx, jx) * falling(k + ky, ky)));
    }
  }
  return out;
}

Series2 divide(const Series2& f, const Series2& g) {
  require_same_cap(f, g, "divide");
  const Rational& g0 = g.constant_term();
  if (sgn(g0) == 0) throw Error(Errc::unit_division, "divide: divisor has zero constant term");
  const int cap = f.cap();
  Series2 q(cap);
  Rational acc;
  for (int n = 0; n <= cap; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int j = n - k;
      acc = f.coeff(j, k);
      for (int a = 0; a <= j; ++a) {
        for (int b = 0; b <= k; ++b) {
          if (a == 0 && b == 0) continue;
          const Rational& gc = g.coeff(a, b);
          if (sgn(gc) == 0) continue;
          acc -= gc * q.coeff(j - a, k - b);
        }
      }
      q.set_coeff(j, k, Rational(acc / g0));
    }
  }
  return q;
}

Series2 substitute(const Series2& f, const Series2& px, const Series2& py) {
  require_same_cap(f, px, "substitute");
  require_same_cap(f, py, "substitute");
  if (sgn(px.constant_term()) != 0 || sgn(py.constant_term()) != 0) {
    throw Error(Errc::substitution, "substitute: substituted series must vanish at the origin");
  }
  const int cap = f.cap();
  std::vector<Series2> py_pow{Series2::constant(cap, Rational(1))};
  for (int k = 1; k <= cap; ++k) py_pow.push_back(py_pow.back() * py);

  // Horner in px over inner polynomials in py.
  Series2 out(cap);
  for (int j = cap; j >= 0; --j) {
    Series2 inner(cap);
    for (int k = 0; k <= cap - j; ++k) {
      const Rational& c = f.coeff(j, k);
      if (sgn(c) != 0) inner += c * py_pow[static_cast<std::size_t>(k)];
    }
    out = out * px + inner;
  }
  return out;
}

std::pair<Series2, Series2> invert_map(const Series2& fx, const Series2& fy) {
  require_same_cap(fx, fy, "invert_map");
  const int cap = fx.cap();
  auto coeff_or_zero = [](const Series2& s, int j, int k) { return j + k <= s.cap() ? s.coeff(j, k) : Rational(0); };
  const bool identity_linear = sgn(fx.constant_term()) == 0 && sgn(fy.constant_term()) == 0 &&
                               coeff_or_zero(fx, 1, 0) == 1 && sgn(coeff_or_zero(fx, 0, 1)) == 0 &&
                               sgn(coeff_or_zero(fy, 1, 0)) == 0 && coeff_or_zero(fy, 0, 1) == 1;
  if (!identity_linear) throw Error(Errc::unsupported_map, "invert_map: linear part must be the identity");

  const Series2 x = Series2::x(cap);
  const Series2 y = Series2::y(cap);
  const Series2 nx = fx - x;
  const Series2 ny = fy - y;
  // Each pass of G <- id - N(G) fixes one more total degree.
  Series2 gx = x;
  Series2 gy = y;
  for (int pass = 1; pass < cap; ++pass) {
    Series2 next_x = x - substitute(nx, gx, gy);
    Series2 next_y = y - substitute(ny, gx, gy);
    gx = std::move(next_x);
    gy = std::move(next_y);
  }
  return {gx, gy};
}

Series2 substitute_monomial(const Series2& f, const MonomialMap& map, int result_cap) {
  Series2 out(result_cap);
  for (int n = 0; n <= f.cap(); ++n) {
    for (int k = 0; k <= n; ++k) {
      const int j = n - k;
      const Rational& c = f.coeff(j, k);
      if (sgn(c) == 0) continue;
      const int u = map.ax * j + map.ay * k;
      const int v = map.bx * j + map.by * k;
      if (u + v > result_cap) continue;
      Rational term = c;
      for (int i = 0; i < j; ++i) term *= map.sx;
      for (int i = 0; i < k; ++i) term *= map.sy;
      out.set_coeff(u, v, out.coeff(u, v) + term);
    }
  }
  return out;
}

}  // namespace wcong
