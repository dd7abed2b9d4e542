#include "laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace sunitgcd {

LaurentPoly2 LaurentPoly2::constant(const Rational& a) {
  LaurentPoly2 p;
  if (a != 0) p.terms_[{0, 0}] = a;
  return p;
}

LaurentPoly2 LaurentPoly2::monomial(long i, long j, const Rational& a) {
  LaurentPoly2 p;
  if (a != 0) p.terms_[{i, j}] = a;
  return p;
}

Rational LaurentPoly2::coeff(long i, long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::set_coeff(long i, long j, const Rational& a) {
  if (a == 0)
    terms_.erase({i, j});
  else
    terms_[{i, j}] = a;
}

bool LaurentPoly2::has_negative_exponents() const {
  for (const auto& [e, a] : terms_)
    if (e.first < 0 || e.second < 0) return true;
  return false;
}

Rational LaurentPoly2::eval(const Rational& u, const Rational& v) const {
  if (u == 0 || v == 0)
    throw DomainError("Laurent evaluation requires nonzero coordinates");
  Rational s = 0;
  for (const auto& [e, a] : terms_)
    s += a * rational_pow(u, e.first) * rational_pow(v, e.second);
  return s;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 out = *this;
  for (const auto& [e, a] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_[e] = a;
    } else {
      it->second += a;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [e, a] : out.terms_) a = -a;
  return out;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  return *this + (-o);
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 out;
  for (const auto& [e1, a1] : terms_)
    for (const auto& [e2, a2] : o.terms_) {
      Exponent e{e1.first + e2.first, e1.second + e2.second};
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        if (a1 * a2 != 0) out.terms_[e] = a1 * a2;
      } else {
        it->second += a1 * a2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

MonomialSet MonomialSet::of(const LaurentPoly2& f) {
  std::vector<Exponent> pts;
  for (const auto& [e, a] : f.terms()) pts.push_back(e);
  return of_points(std::move(pts));
}

MonomialSet MonomialSet::of_points(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  MonomialSet m;
  for (const Exponent& e : pts) {
    m.d1 = std::max(m.d1, std::abs(e.first));
    m.d2 = std::max(m.d2, std::abs(e.second));
    if (e == Exponent{0, 0}) m.contains_one = true;
  }
  m.points = std::move(pts);
  return m;
}

// ---------------------------------------------------------------------------
// Conversions between sparse bivariate and dense nested-univariate views.
// ---------------------------------------------------------------------------
namespace {

using YX = UPoly<QPoly>;  // polynomial in Y whose coefficients live in Q[X]

void require_polynomial(const LaurentPoly2& p, const char* who) {
  if (p.has_negative_exponents())
    throw DomainError(std::string(who) + " requires nonnegative exponents");
}

YX to_yx(const LaurentPoly2& p) {
  long dy = 0;
  for (const auto& [e, a] : p.terms()) dy = std::max(dy, e.second);
  std::vector<QPoly> coeffs(static_cast<std::size_t>(dy) + 1);
  for (const auto& [e, a] : p.terms()) {
    auto& q = coeffs[static_cast<std::size_t>(e.second)];
    if (q.c.size() <= static_cast<std::size_t>(e.first))
      q.c.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
    q.c[static_cast<std::size_t>(e.first)] = a;
  }
  for (auto& q : coeffs) q.trim();
  return YX(std::move(coeffs));
}

LaurentPoly2 from_yx(const YX& p) {
  LaurentPoly2 out;
  for (std::size_t j = 0; j < p.c.size(); ++j)
    for (std::size_t i = 0; i < p.c[j].c.size(); ++i)
      out.set_coeff(static_cast<long>(i), static_cast<long>(j), p.c[j].c[i]);
  return out;
}

LaurentPoly2 swap_vars(const LaurentPoly2& p) {
  LaurentPoly2 out;
  for (const auto& [e, a] : p.terms()) out.set_coeff(e.second, e.first, a);
  return out;
}

LaurentPoly2 from_qpoly_x(const QPoly& p) {
  LaurentPoly2 out;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    out.set_coeff(static_cast<long>(i), 0, p.c[i]);
  return out;
}

QPoly content_yx(const YX& p) {
  QPoly g;
  for (const QPoly& c : p.c) g = gcd_qpoly(g, c);
  return g;
}

YX divide_content(const YX& p, const QPoly& content) {
  YX out = p;
  for (QPoly& c : out.c)
    if (!c.zero()) c = exact_div(c, content);
  return out;
}

// Pseudo-remainder of a by b in (Q[X])[Y]; b != 0.
YX prem_yx(YX a, const YX& b) {
  SGC_CHECK(!b.zero());
  while (!a.zero() && a.deg() >= b.deg()) {
    QPoly la = a.lc();
    long shift = a.deg() - b.deg();
    YX t;
    t.c.assign(static_cast<std::size_t>(shift) + 1, QPoly{});
    t.c.back() = la;
    a = scale(a, b.lc()) - b * t;
  }
  return a;
}

}  // namespace

QPoly to_qpoly_x(const LaurentPoly2& p) {
  require_polynomial(p, "to_qpoly_x");
  QPoly out;
  for (const auto& [e, a] : p.terms()) {
    if (e.second != 0)
      throw DomainError("polynomial involves Y where only X is allowed");
    if (out.c.size() <= static_cast<std::size_t>(e.first))
      out.c.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
    out.c[static_cast<std::size_t>(e.first)] = a;
  }
  out.trim();
  return out;
}

QPoly to_qpoly_y(const LaurentPoly2& p) { return to_qpoly_x(swap_vars(p)); }

LaurentPoly2 poly_gcd2(const LaurentPoly2& a, const LaurentPoly2& b) {
  require_polynomial(a, "poly_gcd2");
  require_polynomial(b, "poly_gcd2");
  if (a.zero()) return b;
  if (b.zero()) return a;
  YX A = to_yx(a), B = to_yx(b);
  QPoly cg = gcd_qpoly(content_yx(A), content_yx(B));
  A = divide_content(A, content_yx(A));
  B = divide_content(B, content_yx(B));
  while (!B.zero()) {
    YX r = prem_yx(A, B);
    A = B;
    if (r.zero()) {
      B = YX{};
    } else {
      B = divide_content(r, content_yx(r));
    }
  }
  YX g = scale(divide_content(A, content_yx(A)), cg);
  LaurentPoly2 out = from_yx(g);
  // Normalize: coefficient 1 at the lexicographically greatest monomial.
  const auto& terms = out.terms();
  SGC_CHECK(!terms.empty());
  Rational lead = std::prev(terms.end())->second;
  LaurentPoly2 norm;
  for (const auto& [e, c] : terms) norm.set_coeff(e.first, e.second, c / lead);
  return norm;
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

RationalFunction2::RationalFunction2(LaurentPoly2 num, LaurentPoly2 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw DomainError("rational function with zero denominator");
  require_polynomial(num_, "rational function numerator");
  require_polynomial(den_, "rational function denominator");
  LaurentPoly2 g = poly_gcd2(num_, den_);
  if (g.terms().size() != 1 || g.terms().begin()->first != Exponent{0, 0}) {
    throw DomainError("numerator and denominator share a factor");
  }
  // Denominator's lex-greatest coefficient becomes 1.
  Rational lead = std::prev(den_.terms().end())->second;
  if (lead != 1) {
    LaurentPoly2 scale2 = LaurentPoly2::constant(1 / lead);
    num_ = num_ * scale2;
    den_ = den_ * scale2;
  }
}

Rational RationalFunction2::eval(const Rational& u, const Rational& v) const {
  Rational d = den_.eval(u, v);
  if (d == 0)
    throw PoleError("pole at (" + format_rational(u) + ", " +
                    format_rational(v) + ")");
  if (num_.zero()) return Rational(0);
  return num_.eval(u, v) / d;
}

long RationalFunction2::deg_x() const {
  long d = 0;
  for (const auto& [e, a] : num_.terms()) d = std::max(d, e.first);
  for (const auto& [e, a] : den_.terms()) d = std::max(d, e.first);
  return d;
}

long RationalFunction2::deg_y() const {
  long d = 0;
  for (const auto& [e, a] : num_.terms()) d = std::max(d, e.second);
  for (const auto& [e, a] : den_.terms()) d = std::max(d, e.second);
  return d;
}

MonomialSet RationalFunction2::monomials() const {
  std::vector<Exponent> pts;
  for (const auto& [e, a] : num_.terms()) pts.push_back(e);
  for (const auto& [e, a] : den_.terms()) pts.push_back(e);
  return MonomialSet::of_points(std::move(pts));
}

RationalFunction2 as_rational_function(const LaurentPoly2& f) {
  long mi = 0, mj = 0;
  for (const auto& [e, a] : f.terms()) {
    mi = std::min(mi, e.first);
    mj = std::min(mj, e.second);
  }
  LaurentPoly2 num;
  for (const auto& [e, a] : f.terms())
    num.set_coeff(e.first - mi, e.second - mj, a);
  return RationalFunction2(num, LaurentPoly2::monomial(-mi, -mj, 1));
}

// ---------------------------------------------------------------------------
// Support geometry
// ---------------------------------------------------------------------------
namespace {

long cross(const Exponent& a, const Exponent& b) {
  return a.first * b.second - a.second * b.first;
}

Exponent primitive(const Exponent& d) {
  long g = std::gcd(std::abs(d.first), std::abs(d.second));
  SGC_CHECK(g != 0);
  Exponent out{d.first / g, d.second / g};
  if (out.first < 0 || (out.first == 0 && out.second < 0)) {
    out.first = -out.first;
    out.second = -out.second;
  }
  return out;
}

// Integer multiple l with point = l * dir, for point parallel to primitive
// dir (possibly the zero multiple).
long component_along(const Exponent& point, const Exponent& dir) {
  SGC_CHECK(cross(point, dir) == 0);
  return dir.first != 0 ? point.first / dir.first : point.second / dir.second;
}

}  // namespace

std::optional<LineSupport> support_line_test(const MonomialSet& t,
                                             const LaurentPoly2& f) {
  SGC_CHECK_MSG(MonomialSet::of(f).points == t.points,
                "monomial set must be the support of f");
  const auto& pts = t.points;
  if (pts.empty()) throw DomainError("zero polynomial has no support line");
  LineSupport out;
  if (pts.size() == 1) {
    const Exponent& p = pts[0];
    if (p == Exponent{0, 0}) {
      out.dir = {1, 0};  // any primitive direction fits a constant
      out.phi[0] = f.coeff(0, 0);
      return out;
    }
    out.dir = primitive(p);
    out.phi[component_along(p, out.dir)] = f.coeff(p.first, p.second);
    return out;
  }
  Exponent d{pts[1].first - pts[0].first, pts[1].second - pts[0].second};
  for (std::size_t i = 2; i < pts.size(); ++i) {
    Exponent di{pts[i].first - pts[0].first, pts[i].second - pts[0].second};
    if (cross(d, di) != 0) return std::nullopt;
  }
  out.dir = primitive(d);
  bool through_origin = true;
  for (const Exponent& p : pts)
    if (cross(p, out.dir) != 0) through_origin = false;
  if (through_origin) {
    for (const Exponent& p : pts)
      out.phi[component_along(p, out.dir)] = f.coeff(p.first, p.second);
    return out;
  }
  // Affine line: pick the base so that phi's support starts at zero.
  long lmin = 0;
  bool first = true;
  for (const Exponent& p : pts) {
    Exponent rel{p.first - pts[0].first, p.second - pts[0].second};
    long l = (rel == Exponent{0, 0}) ? 0 : component_along(rel, out.dir);
    if (first || l < lmin) lmin = l;
    first = false;
  }
  out.base = {pts[0].first + lmin * out.dir.first,
              pts[0].second + lmin * out.dir.second};
  for (const Exponent& p : pts) {
    Exponent rel{p.first - out.base.first, p.second - out.base.second};
    long l = (rel == Exponent{0, 0}) ? 0 : component_along(rel, out.dir);
    out.phi[l] = f.coeff(p.first, p.second);
  }
  return out;
}

CollapseMap collapse_coefficients(const LaurentPoly2& f, long p, long q,
                                  const Rational& wbar) {
  if (wbar == 0) throw DomainError("collapse requires wbar != 0");
  if (std::gcd(p, q) != 1)
    throw DomainError("collapse direction must be primitive");
  CollapseMap out;
  std::map<long, long> hits;
  for (const auto& [e, a] : f.terms()) {
    long l = q * e.first - p * e.second;
    Rational contrib = a * rational_pow(wbar, e.second);
    auto it = out.by_degree.find(l);
    if (it == out.by_degree.end())
      out.by_degree[l] = contrib;
    else
      it->second += contrib;
    ++hits[l];
  }
  for (const auto& [l, n] : hits)
    if (n > 1) {
      out.collision_degrees.push_back(l);
      if (out.by_degree.at(l) == 0) out.cancellation = true;
    }
  return out;
}

Rational univariate_eval(const std::map<long, Rational>& c,
                         const Rational& t) {
  if (t == 0) throw DomainError("univariate evaluation requires t != 0");
  Rational s = 0;
  for (const auto& [l, a] : c) s += a * rational_pow(t, l);
  return s;
}

long univariate_degree(const std::map<long, Rational>& c) {
  long m = 0, M = 0;
  bool any = false;
  for (const auto& [l, a] : c) {
    if (a == 0) continue;
    if (!any) {
      m = M = l;
      any = true;
    } else {
      m = std::min(m, l);
      M = std::max(M, l);
    }
  }
  if (!any) throw DomainError("degree of the zero function is undefined");
  return std::max(std::labs(m), std::labs(M));
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------
namespace {

QPoly qpoly_pow(const QPoly& base, long e) {
  QPoly out = QPoly::constant(Rational(1));
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

// Fraction-free Gaussian elimination; entries live in Q[X].
QPoly det_bareiss(std::vector<std::vector<QPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly::constant(Rational(1));
  int sign = 1;
  QPoly prev = QPoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].zero()) ++pivot;
    if (pivot == n) return QPoly{};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        QPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t.zero() ? QPoly{} : exact_div(t, prev);
      }
      m[i][k] = QPoly{};
    }
    prev = m[k][k];
  }
  QPoly out = m[n - 1][n - 1];
  return sign < 0 ? -out : out;
}

}  // namespace

LaurentPoly2 resultant_y(const LaurentPoly2& p, const LaurentPoly2& q) {
  require_polynomial(p, "resultant");
  require_polynomial(q, "resultant");
  if (p.zero() || q.zero())
    throw DomainError("resultant requires nonzero polynomials");
  YX P = to_yx(p), Q = to_yx(q);
  const long m = P.deg(), n = Q.deg();
  if (m == 0 && n == 0) return LaurentPoly2::constant(1);
  if (m == 0) return from_qpoly_x(qpoly_pow(P.c[0], n));
  if (n == 0) return from_qpoly_x(qpoly_pow(Q.c[0], m));
  const std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<QPoly>> s(dim, std::vector<QPoly>(dim, QPoly{}));
  for (long r = 0; r < n; ++r)
    for (long j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
          P.c[static_cast<std::size_t>(m - j)];
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
          Q.c[static_cast<std::size_t>(n - j)];
  QPoly det = det_bareiss(std::move(s));
  if (det.zero()) throw DomainError("inputs share a factor");
  return from_qpoly_x(det);
}

LaurentPoly2 resultant_x(const LaurentPoly2& p, const LaurentPoly2& q) {
  return swap_vars(resultant_y(swap_vars(p), swap_vars(q)));
}

// ---------------------------------------------------------------------------
// Support height bound
// ---------------------------------------------------------------------------

MonomialHeightBound monomial_height_bound(const MonomialSet& t,
                                          const Rational& u, const Rational& v) {
  if (u == 0 || v == 0)
    throw DomainError("monomial_height_bound requires u, v != 0");
  std::vector<Exponent> pts;
  for (const Exponent& e : t.points)
    if (e != Exponent{0, 0}) pts.push_back(e);
  bool rank2 = false;
  for (std::size_t i = 0; i < pts.size() && !rank2; ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (cross(pts[i], pts[j]) != 0) {
        rank2 = true;
        break;
      }
  if (!rank2)
    throw DomainError("support must contain two independent monomials");
  MonomialHeightBound rep;
  rep.hu = height_rational(u);
  rep.hv = height_rational(v);
  Rational hmax = 1;
  for (const Exponent& e : pts) {
    rep.d1 = std::max(rep.d1, std::abs(e.first));
    rep.d2 = std::max(rep.d2, std::abs(e.second));
    Rational val = rational_pow(u, e.first) * rational_pow(v, e.second);
    hmax = std::max(hmax, height_rational(val).mult);
  }
  rep.hmax = HeightValue{hmax};
  rep.holds = rational_pow(hmax, 2 * rep.d2) >= rep.hu.mult &&
              rational_pow(hmax, 2 * rep.d1) >= rep.hv.mult;
  return rep;
}

std::vector<Rational> rational_roots(const QPoly& p, const FactorConfig& cfg) {
  if (p.zero()) throw DomainError("rational roots of the zero polynomial");
  QPoly q = p;
  std::vector<Rational> roots;
  // Strip t^k: root zero.
  std::size_t shift = 0;
  while (shift < q.c.size() && q.c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(shift));
  }
  if (q.deg() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Integer coefficients: multiply by the lcm of denominators.
  Integer L = 1;
  for (const Rational& a : q.c)
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> ic;
  for (const Rational& a : q.c) ic.push_back(a.get_num() * (L / a.get_den()));
  auto divisors = [&cfg](const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [pr, e] : factor(n, cfg)) {
      std::vector<Integer> next;
      Integer pk = 1;
      for (long k = 0; k <= e; ++k) {
        for (const Integer& d : out) next.push_back(d * pk);
        pk *= pr;
      }
      out = std::move(next);
    }
    return out;
  };
  for (const Integer& a : divisors(ic.front()))
    for (const Integer& b : divisors(ic.back()))
      for (int sign : {1, -1}) {
        Rational cand = make_rational(sign * a, b);
        if (eval_upoly(q, cand, Rational(0)) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace sunitgcd
