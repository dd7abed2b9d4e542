#include <algorithm>
#include <vector>

#include "doctest.h"
#include "qplaces.hpp"

using namespace sunitgcd;

TEST_CASE("place construction and equality") {
  Place inf = Place::infinity();
  CHECK(inf.archimedean);
  CHECK(inf.str() == "inf");

  Place p2 = Place::finite(2);
  CHECK_FALSE(p2.archimedean);
  CHECK(p2.prime == 2);
  CHECK(p2.str() == "2");

  CHECK(inf == Place::infinity());
  CHECK(p2 == Place::finite(2));
  CHECK_FALSE(p2 == Place::finite(3));
  CHECK_FALSE(p2 == inf);

  CHECK_THROWS_AS(Place::finite(4), DomainError);
  CHECK_THROWS_AS(Place::finite(1), DomainError);
  CHECK_THROWS_AS(Place::finite(-3), DomainError);
}

TEST_CASE("place set keeps sorted distinct primes and always holds infinity") {
  PlaceSet s({Integer(5), Integer(2), Integer(5), Integer(3)});
  CHECK(s.primes() == std::vector<Integer>{2, 3, 5});
  CHECK(s.contains_prime(2));
  CHECK_FALSE(s.contains_prime(7));
  CHECK(s.contains(Place::infinity()));
  CHECK(s.contains(Place::finite(3)));
  CHECK_FALSE(s.contains(Place::finite(11)));

  auto places = s.places();
  REQUIRE(places.size() == 4);
  CHECK(places[0].archimedean);
  CHECK(places[1].prime == 2);
  CHECK(places[2].prime == 3);
  CHECK(places[3].prime == 5);

  CHECK_THROWS_AS(PlaceSet({Integer(6)}), DomainError);

  PlaceSet empty;
  CHECK(empty.places().size() == 1);
  CHECK(empty.places()[0].archimedean);
}

TEST_CASE("primality test on small and structured inputs") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(1105));  // Carmichael
  CHECK(is_prime(Integer("2147483647")));        // 2^31 - 1
  CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(Integer("2305843009213693951") * 7));
  CHECK_FALSE(is_prime(-5));
}

TEST_CASE("p-adic valuation of rationals") {
  CHECK(valuation(Rational(12), 2) == 2);
  CHECK(valuation(Rational(3, 8), 2) == -3);
  CHECK(valuation(Rational(91), 7) == 1);
  CHECK(valuation(Rational(5), 2) == 0);
  CHECK(valuation(Rational(-16, 9), 2) == 4);
  CHECK(valuation(Rational(-16, 9), 3) == -2);
  CHECK_THROWS_AS(valuation(Rational(0), 2), DomainError);
  CHECK_THROWS_AS(valuation(Rational(5), 6), DomainError);
}

TEST_CASE("local absolute values") {
  CHECK(abs_at(Rational(12), Place::finite(2)) == Rational(1, 4));
  CHECK(abs_at(Rational(3, 8), Place::finite(2)) == Rational(8));
  CHECK(abs_at(Rational(-5), Place::infinity()) == Rational(5));
  CHECK(abs_at(Rational(-5), Place::finite(3)) == Rational(1));
  CHECK(abs_at(Rational(0), Place::finite(7)) == Rational(0));
  CHECK(abs_at(Rational(0), Place::infinity()) == Rational(0));
}

TEST_CASE("factorization of integers") {
  using Pairs = std::vector<std::pair<Integer, long>>;
  CHECK(factor(1) == Pairs{});
  CHECK(factor(-1) == Pairs{});
  CHECK(factor(2) == Pairs{{2, 1}});
  CHECK(factor(82944) == Pairs{{2, 10}, {3, 4}});
  CHECK(factor(-60) == Pairs{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factor(Integer("600851475143")) == Pairs{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  // A product of two nine-digit primes, beyond the trial-division range.
  Integer p("999999937"), q("999999893");
  CHECK(factor(p * q) == Pairs{{q, 1}, {p, 1}});
  CHECK_THROWS_AS(factor(0), DomainError);
}

TEST_CASE("factorization bailout carries the unsplit cofactor") {
  FactorConfig tight;
  tight.bailout = 1000;
  Integer semiprime = Integer(1009) * Integer(1013);
  try {
    factor(semiprime, tight);
    FAIL("expected FactorBailout");
  } catch (const FactorBailout& b) {
    CHECK(b.cofactor() == semiprime);
  }
  // The same number splits fine with the default config.
  CHECK(factor(semiprime).size() == 2);
}

TEST_CASE("product formula on worked examples") {
  auto w = product_formula_check(Rational(6, 35));
  CHECK(w.finite_part == Rational(35, 6));
  CHECK(w.archimedean_part == Rational(6, 35));
  CHECK(w.total == 1);
  CHECK(w.holds);

  auto m = product_formula_check(Rational(-12));
  CHECK(m.finite_part == Rational(1, 12));
  CHECK(m.archimedean_part == Rational(12));
  CHECK(m.holds);

  CHECK(product_formula_check(Rational(1)).holds);
  CHECK_THROWS_AS(product_formula_check(Rational(0)), DomainError);
}
