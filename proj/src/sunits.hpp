#pragma once

// S-units of the rational field: numbers +-prod p^e over the primes of a
// place set.  Exponent-vector view, deterministic bounded enumeration,
// multiplicative dependence through the exponent lattice, and membership /
// parametrization for rank-one subtori of the two-dimensional torus.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qplaces.hpp"
#include "rational.hpp"

namespace sunitgcd {

class SUnit {
 public:
  // sign in {+1,-1}; every exponent key must be a prime of `s`.
  SUnit(int sign, std::map<Integer, long> exponents, const PlaceSet& s);
  // Convenience: the unit 1 (empty exponent vector).
  SUnit() : sign_(1) {}

  // Factors x over S; DomainError naming an offending prime when x is not
  // an S-unit (or is zero).
  static SUnit from_rational(const Rational& x, const PlaceSet& s,
                             const FactorConfig& cfg = {});

  int sign() const { return sign_; }
  const std::map<Integer, long>& exponents() const { return exponents_; }
  long exponent_of(const Integer& p) const;
  Rational value() const;

  bool operator==(const SUnit& o) const {
    return sign_ == o.sign_ && exponents_ == o.exponents_;
  }

 private:
  int sign_ = 1;
  std::map<Integer, long> exponents_;  // nonzero entries only
};

enum class SignMode { Positive, Both };

// All S-units with |exponent| <= bound for each prime of S, in a fixed
// deterministic order: lexicographic in the exponent vector (primes
// ascending, exponents from -bound to bound), positive sign before negative.
// Exactly (2*bound+1)^k values per sign choice, k = number of primes.
std::vector<SUnit> enumerate_sunits(const PlaceSet& s, long bound,
                                    SignMode signs);

// u^p * v^q = w on a rank-one subtorus: gcd(p,q) = 1 and the sign is
// canonical (p > 0, or p = 0 and q > 0).
struct MultiplicativeRelation {
  long p = 0;
  long q = 0;
  Rational w = 1;

  bool operator==(const MultiplicativeRelation& o) const {
    return p == o.p && q == o.q && w == o.w;
  }
  bool operator<(const MultiplicativeRelation& o) const {
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return w < o.w;
  }
};

// Canonicalizes direction and root-of-unity normalization: divides by
// gcd(|p|,|q|) is NOT performed here (caller guarantees primitivity);
// flips sign so p > 0 or (p = 0, q > 0), inverting w accordingly.
MultiplicativeRelation canonical_relation(long p, long q, const Rational& w);

// Multiplicative dependence of (u, v): the primitive relation
// u^p v^q = w with w in {+1,-1}, when one exists.  If u or v is +-1 the
// corresponding axis relation is returned ((1,0,u) resp. (0,1,v)).
std::optional<MultiplicativeRelation> dependence(const SUnit& u,
                                                 const SUnit& v);

// Dependence of two arbitrary nonzero rationals: factors them first and
// reuses the exponent-lattice test over the union of their prime supports.
std::optional<MultiplicativeRelation> rational_dependence(
    const Rational& u, const Rational& v, const FactorConfig& cfg = {});

// Exact test of u^p v^q == w.
bool on_subtorus(const Rational& u, const Rational& v,
                 const MultiplicativeRelation& rel);

// Exact parametrization u = t^q, v = wbar * t^(-p) of a point known to lie
// on the subtorus of `rel`; both identities are re-verified exactly.
struct Parametrization {
  Rational t;
  Rational wbar;
  long p = 0;
  long q = 0;
};
Parametrization parametrize(const Rational& u, const Rational& v,
                            const MultiplicativeRelation& rel,
                            const FactorConfig& cfg = {});

}  // namespace sunitgcd
