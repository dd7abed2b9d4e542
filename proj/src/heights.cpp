#include "heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace sunitgcd {

double log_approx(const Rational& x) {
  if (x <= 0) throw DomainError("log of a nonpositive value");
  mpfr_t t;
  mpfr_init2(t, 160);  // >= 128 fractional bits for desk-scale magnitudes
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

double HeightValue::log() const { return log_approx(mult); }

double nearest_double(const Rational& x) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

HeightValue height_rational(const Rational& x) {
  Integer n = abs(x.get_num());
  const Integer& d = x.get_den();
  return HeightValue{Rational(std::max(n, d))};
}

HeightValue height_projective(std::span<const Rational> coords) {
  if (coords.empty()) throw DomainError("projective height of empty tuple");
  Integer L = 1;
  bool all_zero = true;
  for (const Rational& c : coords) {
    if (c != 0) all_zero = false;
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  }
  if (all_zero)
    throw DomainError("projective height requires a nonzero coordinate");
  std::vector<Integer> ints;
  Integer g = 0;
  for (const Rational& c : coords) {
    Integer y = c.get_num() * (L / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    ints.push_back(std::move(y));
  }
  Integer best = 0;
  for (const Integer& y : ints) best = std::max(best, Integer(abs(y)));
  return HeightValue{Rational(best / g)};
}

HeightValue height_affine_point(std::span<const Rational> coords) {
  if (coords.empty()) throw DomainError("affine height of empty tuple");
  // Finite places: prod_p p^(-min_i v_p(x_i)) = L / gcd_i(x_i * L) where L is
  // the lcm of the denominators.  Archimedean: max_i |x_i|.
  Integer L = 1;
  for (const Rational& c : coords)
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  Rational arch = 0;
  for (const Rational& c : coords) {
    Integer y = c.get_num() * (L / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    arch = std::max(arch, abs_rational(c));
  }
  if (g == 0) throw DomainError("affine height requires a nonzero coordinate");
  return HeightValue{make_rational(L, g) * arch};
}

double LogMinusSum::archimedean_part() const { return log_approx(arch_mult); }

double LogMinusSum::total_log() const {
  return -log_approx(Rational(finite_part)) + archimedean_part();
}

LogMinusSum logminus_sum(std::span<const Rational> values,
                         const PlaceFilter& filter) {
  if (values.empty()) throw DomainError("log-minus sum of empty tuple");
  Integer g = 0;
  Rational arch_max = 0;
  for (const Rational& v : values) {
    if (v == 0) throw DomainError("log-minus sum requires nonzero values");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    arch_max = std::max(arch_max, abs_rational(v));
  }
  LogMinusSum out;
  bool include_arch = false;
  if (std::holds_alternative<FilterAll>(filter)) {
    include_arch = true;
    out.finite_part = g;
  } else if (std::holds_alternative<FilterFiniteOnly>(filter)) {
    out.finite_part = g;
  } else if (const auto* c = std::get_if<FilterComplementOf>(&filter)) {
    // Finite places outside S; infinity belongs to S, hence excluded.
    Integer m = g;
    for (const Integer& p : c->set.primes()) {
      Integer stripped;
      mpz_remove(stripped.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      m = stripped;
    }
    out.finite_part = m;
  } else {
    const auto& w = std::get<FilterWithin>(filter);
    include_arch = true;
    Integer m = 1;
    for (const Integer& p : w.set.primes()) {
      Integer stripped;
      long e = static_cast<long>(
          mpz_remove(stripped.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t()));
      m *= ipow(p, static_cast<unsigned long>(e));
    }
    out.finite_part = m;
  }
  out.arch_mult = include_arch ? mult_minus(arch_max) : Rational(1);
  return out;
}

double log_plus(double x) {
  if (x <= 0) throw DomainError("log_plus of a nonpositive value");
  return x > 1 ? std::log(x) : 0.0;
}

double log_minus(double x) {
  if (x <= 0) throw DomainError("log_minus of a nonpositive value");
  return x < 1 ? std::log(x) : 0.0;
}

Rational mult_plus(const Rational& x) {
  if (x <= 0) throw DomainError("mult_plus of a nonpositive value");
  return std::max(x, Rational(1));
}

Rational mult_minus(const Rational& x) {
  if (x <= 0) throw DomainError("mult_minus of a nonpositive value");
  return std::min(x, Rational(1));
}

}  // namespace sunitgcd
