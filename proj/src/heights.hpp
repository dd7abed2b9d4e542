#pragma once

// Multiplicative Weil heights over the rationals, kept exact: the height of
// a tuple of rationals is itself a rational, and inequalities between
// heights are decided on the exact values.  Logarithms appear only in
// reporting helpers.

#include <span>
#include <variant>
#include <vector>

#include "qplaces.hpp"
#include "rational.hpp"

namespace sunitgcd {

// Which places enter a local sum.
struct FilterAll {};
struct FilterFiniteOnly {};
struct FilterComplementOf {  // finite places outside S (S always holds inf)
  PlaceSet set;
};
struct FilterWithin {  // members of S, archimedean included
  PlaceSet set;
};
using PlaceFilter =
    std::variant<FilterAll, FilterFiniteOnly, FilterComplementOf, FilterWithin>;

// Multiplicative height with a logarithmic view for reporting.
struct HeightValue {
  Rational mult = 1;  // exact; >= 1 for the single/projective heights
  double log() const;
};

// H(x) = prod_mu max(1, |x|_mu) = max(|num|, den) for x in lowest terms.
HeightValue height_rational(const Rational& x);

// Projective height of (x_0 : ... : x_n), not all zero: reduce to a coprime
// integer vector, then take the largest absolute value.
HeightValue height_projective(std::span<const Rational> coords);

// Affine-point height prod_mu max_i |x_i|_mu of a nonzero coordinate tuple.
// May be < 1 (it is >= 1 whenever some coordinate is 1).
HeightValue height_affine_point(std::span<const Rational> coords);

// Value of sum_mu log^- max_i |x_i|_mu over the filtered places, carried in
// exact multiplicative form: the finite-place part is -log(finite_part) for a
// positive integer finite_part, and the archimedean factor is an exact
// rational in (0, 1] (equal to 1 when the filter excludes infinity).
struct LogMinusSum {
  Integer finite_part = 1;
  Rational arch_mult = 1;
  double archimedean_part() const;  // log(arch_mult) <= 0
  double total_log() const;         // -log(finite_part) + archimedean_part()
  Rational total_mult() const { return arch_mult / Rational(finite_part); }
};

// The finite part equals the gcd of the numerators of the values in lowest
// terms, with prime powers belonging to excluded places divided out.
// Values must be nonzero.
LogMinusSum logminus_sum(std::span<const Rational> values,
                         const PlaceFilter& filter);

// log max(1, x) and log min(1, x) for x > 0.
double log_plus(double x);
double log_minus(double x);
Rational mult_plus(const Rational& x);   // max(1, x), x > 0
Rational mult_minus(const Rational& x);  // min(1, x), x > 0

// log of an exact positive rational, correctly rounded from 128 fractional
// bits of working precision.
double log_approx(const Rational& x);

// Round-to-nearest double of an exact rational (GMP's own conversion
// truncates; reporting columns need the nearest value so that independent
// reimplementations reading the same exact data agree bit for bit).
double nearest_double(const Rational& x);

}  // namespace sunitgcd
