#pragma once

// Places of the rational field: one archimedean place plus one finite place
// per prime.  Provides exact valuations, exact local absolute values, integer
// factorization, and the product-formula self check.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sunitgcd {

struct Place {
  bool archimedean = false;
  Integer prime = 0;  // meaningful only when !archimedean

  static Place infinity() { return Place{true, 0}; }
  // Requires a prime argument; throws DomainError otherwise.
  static Place finite(const Integer& p);

  bool operator==(const Place& o) const {
    return archimedean == o.archimedean &&
           (archimedean || prime == o.prime);
  }
  std::string str() const {
    return archimedean ? std::string("inf") : prime.get_str();
  }
};

// Finite set of places that always contains the archimedean one; the finite
// members are given by distinct primes, kept sorted.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<Integer> primes);

  const std::vector<Integer>& primes() const { return primes_; }
  bool contains_prime(const Integer& p) const;
  bool contains(const Place& place) const {
    return place.archimedean || contains_prime(place.prime);
  }
  // All members, archimedean place first.
  std::vector<Place> places() const;
  std::string str() const;

  bool operator==(const PlaceSet& o) const { return primes_ == o.primes_; }

 private:
  std::vector<Integer> primes_;
};

// Deterministic primality test for the magnitudes this library supports
// (Miller-Rabin with a base set proven complete below 3.3e24; inputs above
// that fall back to a high-repetition probabilistic test).
bool is_prime(const Integer& n);

// p-adic valuation of x != 0; throws DomainError on x == 0 or non-prime p.
long valuation(const Rational& x, const Integer& p);

// |x| at a place, as an exact rational (finite: p^-v(x), 0 for x = 0;
// archimedean: |x|).
Rational abs_at(const Rational& x, const Place& place);

struct FactorConfig {
  // Composite cofactors above this bound are not split; factor() then throws
  // FactorBailout carrying the cofactor.
  Integer bailout = Integer("1000000000000000000");
};

class FactorBailout : public DomainError {
 public:
  FactorBailout(const Integer& cofactor, const std::string& what)
      : DomainError(what), cofactor_(cofactor) {}
  const Integer& cofactor() const { return cofactor_; }

 private:
  Integer cofactor_;
};

// Prime factorization of |n|, n != 0, as (prime, exponent) pairs sorted by
// prime.  factor(1) == {}.  Trial division below 1e6, then deterministic
// Miller-Rabin plus Pollard rho with fixed internal seeds.
std::vector<std::pair<Integer, long>> factor(const Integer& n,
                                             const FactorConfig& cfg = {});

struct ProductFormulaWitness {
  Rational finite_part;      // product of |x|_p over all primes, exact
  Rational archimedean_part; // |x|
  Rational total;            // finite_part * archimedean_part
  bool holds = false;        // total == 1
};

// Verifies prod_mu |x|_mu = 1 for x != 0 by factoring numerator and
// denominator; also asserts the finite part equals den(x)/|num(x)|.
ProductFormulaWitness product_formula_check(const Rational& x,
                                            const FactorConfig& cfg = {});

}  // namespace sunitgcd
