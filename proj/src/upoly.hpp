#pragma once

// Dense univariate polynomials over an exact coefficient ring, used as the
// workhorse for bivariate gcds (coefficients in Q[X]) and Sylvester-style
// elimination.  Only what the elimination code needs: ring arithmetic,
// field division when the coefficients form a field, pseudo-division, and
// content/primitive-part bookkeeping.

#include <vector>

#include "rational.hpp"

namespace sunitgcd {

template <class C>
struct UPoly {
  std::vector<C> c;  // c[i] multiplies t^i; trimmed so c.back() != 0

  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const C& v) {
    UPoly p;
    if (!(v == C{})) p.c.push_back(v);
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == C{}) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long deg() const { return static_cast<long>(c.size()) - 1; }
  const C& lc() const {
    SGC_CHECK(!c.empty());
    return c.back();
  }
  C at(std::size_t i) const { return i < c.size() ? c[i] : C{}; }

  bool operator==(const UPoly& o) const { return c == o.c; }
};

template <class C>
UPoly<C> operator+(const UPoly<C>& a, const UPoly<C>& b) {
  std::vector<C> out(std::max(a.c.size(), b.c.size()), C{});
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] + b.c[i];
  return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> operator-(const UPoly<C>& a) {
  UPoly<C> out = a;
  for (C& x : out.c) x = C{} - x;
  return out;
}

template <class C>
UPoly<C> operator-(const UPoly<C>& a, const UPoly<C>& b) {
  return a + (-b);
}

template <class C>
UPoly<C> operator*(const UPoly<C>& a, const UPoly<C>& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<C> out(a.c.size() + b.c.size() - 1, C{});
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out[i + j] = out[i + j] + a.c[i] * b.c[j];
  return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> scale(const UPoly<C>& a, const C& s) {
  UPoly<C> out;
  out.c.reserve(a.c.size());
  for (const C& x : a.c) out.c.push_back(x * s);
  out.trim();
  return out;
}

// Horner evaluation.
template <class C, class V>
V eval_upoly(const UPoly<C>& a, const V& t, const V& zero) {
  V acc = zero;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * t + V(a.c[i]);
  return acc;
}

using QPoly = UPoly<Rational>;

// Division with remainder over the rational coefficient field; b != 0.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  SGC_CHECK_MSG(!b.zero(), "division by zero polynomial");
  QPoly r = a, q;
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rational(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    Rational f = r.lc() / b.lc();
    long shift = r.deg() - b.deg();
    q.c[shift] = f;
    for (long i = 0; i <= b.deg(); ++i)
      r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

// Exact division: a / b with zero remainder asserted.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  SGC_CHECK_MSG(r.zero(), "polynomial division expected to be exact");
  return q;
}

// Monic gcd over the rationals (zero for two zero inputs).
inline QPoly gcd_qpoly(QPoly a, QPoly b) {
  while (!b.zero()) {
    QPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.zero()) return a;
  const Rational inv = Rational(1) / a.lc();
  return scale(a, inv);
}

}  // namespace sunitgcd
