#pragma once

// Bivariate Laurent polynomials and rational functions over the rationals,
// together with the support-geometry helpers used throughout: monomial
// supports, support-line detection, the one-variable collapse of a Laurent
// polynomial along a primitive direction, elimination resultants, and the
// two-sided height bound for rank-two monomial supports.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "heights.hpp"
#include "rational.hpp"
#include "upoly.hpp"

namespace sunitgcd {

// Evaluation hit a zero denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

using Exponent = std::pair<long, long>;  // (i, j) for X^i Y^j

class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Rational& a);
  static LaurentPoly2 monomial(long i, long j, const Rational& a);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(long i, long j) const;
  void set_coeff(long i, long j, const Rational& a);
  bool zero() const { return terms_.empty(); }
  bool has_negative_exponents() const;

  // Exact value at (u, v); u, v must be nonzero.
  Rational eval(const Rational& u, const Rational& v) const;

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

 private:
  std::map<Exponent, Rational> terms_;  // nonzero coefficients only
};

// Support of a function: exponent pairs sorted lexicographically, with the
// Laurent degree bounds d1 = max |i| and d2 = max |j|.
struct MonomialSet {
  std::vector<Exponent> points;
  long d1 = 0;
  long d2 = 0;
  bool contains_one = false;  // is (0,0) in the support?

  static MonomialSet of(const LaurentPoly2& f);
  static MonomialSet of_points(std::vector<Exponent> pts);
};

// Quotient of two coprime polynomials (nonnegative exponents, denominator
// nonzero).  Normalized so the denominator's lexicographically greatest
// monomial has coefficient 1; equality is structural on that form.
class RationalFunction2 {
 public:
  RationalFunction2(LaurentPoly2 num, LaurentPoly2 den);

  const LaurentPoly2& num() const { return num_; }
  const LaurentPoly2& den() const { return den_; }

  Rational eval(const Rational& u, const Rational& v) const;  // PoleError
  // deg per variable: max of numerator and denominator degree.
  long deg_x() const;
  long deg_y() const;
  // Union of numerator and denominator supports.
  MonomialSet monomials() const;

  bool operator==(const RationalFunction2& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  LaurentPoly2 num_, den_;
};

// Turns a Laurent polynomial into a rational function by clearing negative
// exponents into a monomial denominator.
RationalFunction2 as_rational_function(const LaurentPoly2& f);

// Exact bivariate polynomial gcd (nonnegative exponents); result has the
// normalization of gcd_qpoly contents and a monic-in-Y primitive part.
LaurentPoly2 poly_gcd2(const LaurentPoly2& a, const LaurentPoly2& b);

// All support points lie on one line: returns the primitive direction
// (positive first nonzero entry), a base point, and the univariate Laurent
// coefficients phi with  f(u,v) = u^base.i * v^base.j * phi(u^dir.i v^dir.j).
// The base is (0,0) whenever the support line passes through the origin.
struct LineSupport {
  Exponent dir;
  Exponent base{0, 0};
  std::map<long, Rational> phi;
};
std::optional<LineSupport> support_line_test(const MonomialSet& t,
                                             const LaurentPoly2& f);

// One-variable collapse of f along u = t^q, v = wbar * t^(-p):
// c_l = sum over q*i - p*j = l of a_ij * wbar^j.  Degrees hit by more than
// one support point are collisions; their (possibly zero) coefficients are
// retained in by_degree.
struct CollapseMap {
  std::map<long, Rational> by_degree;
  std::vector<long> collision_degrees;
  bool cancellation = false;  // some collision degree collapsed to zero
};
CollapseMap collapse_coefficients(const LaurentPoly2& f, long p, long q,
                                  const Rational& wbar);

// sum c_l t^l; t != 0 required when negative degrees are present.
Rational univariate_eval(const std::map<long, Rational>& c, const Rational& t);
// max{|l| : c_l != 0}, a lower bound for the degree of the induced rational
// function of t; DomainError when all coefficients vanish.
long univariate_degree(const std::map<long, Rational>& c);

// Eliminates Y (resp. X) from two polynomials via the Sylvester resultant.
// Degenerate conventions: if one input is constant in the eliminated
// variable it is raised to the other's degree; two such inputs give 1.
// Inputs must be nonzero polynomials with nonnegative exponents.
LaurentPoly2 resultant_y(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 resultant_x(const LaurentPoly2& p, const LaurentPoly2& q);

// Height bound for a rank-two monomial support evaluated at (u, v), in
// exact multiplicative form: hmax = max_i H(T_i(u,v)) over the nonconstant
// support, and the always-true conclusions hmax^(2*d2) >= H(u),
// hmax^(2*d1) >= H(v) with d1, d2 taken over the nonconstant support.
struct MonomialHeightBound {
  HeightValue hmax, hu, hv;
  long d1 = 0, d2 = 0;
  bool holds = false;
};
MonomialHeightBound monomial_height_bound(const MonomialSet& t,
                                          const Rational& u, const Rational& v);

// The univariate polynomial r(X) viewed inside this module's types:
// conversions between LaurentPoly2 in one variable and dense QPoly.
QPoly to_qpoly_x(const LaurentPoly2& p);  // p must only involve X
QPoly to_qpoly_y(const LaurentPoly2& p);  // p must only involve Y

// Rational roots of a nonzero univariate polynomial, sorted ascending.
std::vector<Rational> rational_roots(const QPoly& p,
                                     const FactorConfig& cfg = {});

}  // namespace sunitgcd
