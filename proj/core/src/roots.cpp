#include "wcong/roots.hpp"

#include <algorithm>
#include <cmath>

#include "wcong/error.hpp"

namespace wcong {

namespace {

Poly trimmed(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(p[i] * static_cast<long>(i)));
  return trimmed(out);
}

// Remainder of a / b; b nonzero.
Poly remainder(Poly a, const Poly& b) {
  a = trimmed(std::move(a));
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    a = trimmed(std::move(a));
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  Poly q(a.size() - db);
  while (a.size() > db && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
  }
  return trimmed(q);
}

Poly monic(Poly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd_impl(Poly a, Poly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

int sign_at(const Poly& p, const Rational& t) { return sgn(evaluate(p, t)); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Integer> divisors(const Integer& value) {
  Integer v = abs(value);
  if (v > Integer("1000000000000")) throw Error(Errc::domain, "rational_roots: coefficients too large");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

double evaluate(const Poly& p, double t) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

int degree(const Poly& p) { return static_cast<int>(trimmed(p).size()) - 1; }

Rational evaluate(const Poly& p, const Rational& t) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Rational> rational_roots(const Poly& input) {
  Poly p = trimmed(input);
  if (p.empty()) throw Error(Errc::domain, "rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (p.size() > 1) {
    Integer scale(1);
    for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : p) ints.push_back(Integer(c * scale));
    for (const auto& num : divisors(ints.front())) {
      for (const auto& den : divisors(ints.back())) {
        for (int s : {1, -1}) {
          Rational candidate(num * s, den);
          candidate.canonicalize();
          if (sgn(evaluate(p, candidate)) == 0) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<double> real_roots(const Poly& input) {
  const Poly p = trimmed(input);
  if (p.empty()) throw Error(Errc::domain, "real_roots: zero polynomial");
  if (p.size() == 1) return {};
  const Poly g = gcd_impl(p, derivative(p));
  const Poly sf = g.size() > 1 ? monic(quotient(p, g)) : monic(p);

  Rational bound(1);
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) bound = std::max(bound, Rational(abs(sf[i]) + 1));
  const auto chain = sturm_chain(sf);

  std::vector<double> roots;
  // Intervals (lo, hi] each holding the number of roots given by Sturm's count.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (count == 0) continue;
    if (count > 1) {
      const Rational mid = (lo + hi) / 2;
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
      continue;
    }
    // Exactly one root in (lo, hi]; sf is square-free so it changes sign unless the root is hi.
    if (sign_at(sf, hi) == 0) {
      roots.push_back(hi.get_d());
      continue;
    }
    for (int iter = 0; iter < 200 && (hi - lo) > Rational(abs(hi) + abs(lo) + 1) * Rational(1, Integer(1) << 60);
         ++iter) {
      const Rational mid = (lo + hi) / 2;
      const int s = sign_at(sf, mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == sign_at(sf, hi)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    roots.push_back(Rational((lo + hi) / 2).get_d());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace wcong
