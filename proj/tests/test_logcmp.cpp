#include <cmath>

#include "doctest.h"
#include "logcmp.hpp"

using namespace sunitgcd;

namespace {
LogExpr term(const Rational& c, const Rational& b) {
  LogExpr e;
  e.add_term(c, b);
  return e;
}
}  // namespace

TEST_CASE("log expression terms drop no-ops and reject bad bases") {
  LogExpr e;
  e.add_term(Rational(0), Rational(5));  // zero coefficient: dropped
  e.add_term(Rational(3), Rational(1));  // log 1 = 0: dropped
  CHECK(e.empty());
  CHECK(sign_of(e) == Cmp::Equal);
  CHECK(e.approx() == 0.0);
  CHECK_THROWS_AS(e.add_term(Rational(1), Rational(0)), DomainError);
  CHECK_THROWS_AS(e.add_term(Rational(1), Rational(-2)), DomainError);
}

TEST_CASE("interval comparison separates clearly distinct values") {
  CHECK(compare(term(2, 3), term(3, 2)) == Cmp::Greater);  // log 9 > log 8
  CHECK(compare(term(3, 2), term(2, 3)) == Cmp::Less);
  CHECK(sign_of(term(1, Rational(1, 2))) == Cmp::Less);
  CHECK(sign_of(term(-1, Rational(1, 2))) == Cmp::Greater);
  CompareStats stats;
  CHECK(compare(term(1, 2), term(1, 3), &stats) == Cmp::Less);
  CHECK(stats.bits_used >= 64);
  CHECK_FALSE(stats.exact_fallback);
  CHECK_FALSE(stats.undecided);
}

TEST_CASE("exact ties are certified by the integer fallback") {
  // 3 log 2 = log 8
  CompareStats stats;
  CHECK(compare(term(3, 2), term(1, 8), &stats) == Cmp::Equal);
  CHECK(stats.exact_fallback);
  CHECK_FALSE(stats.undecided);
  // (1/2) log 9 = log 3
  CHECK(compare(term(Rational(1, 2), 9), term(1, 3)) == Cmp::Equal);
  // log 2 + log 3 = log 6
  LogExpr lhs = term(1, 2);
  lhs.add_term(1, 3);
  CHECK(compare(lhs, term(1, 6)) == Cmp::Equal);
  // Rational bases: log(3/2) + log(2/3) = 0
  LogExpr z = term(1, Rational(3, 2));
  z.add_term(1, Rational(2, 3));
  CHECK(sign_of(z) == Cmp::Equal);
}

TEST_CASE("near-ties just off equality are still decided to the right side") {
  // (10^6 + 1) log 2 vs 10^6 log 2 + log 2: equal; then nudge one side.
  LogExpr lhs = term(Rational(1000001), 2);
  LogExpr rhs = term(Rational(1000000), 2);
  rhs.add_term(1, 2);
  CHECK(compare(lhs, rhs) == Cmp::Equal);
  rhs.add_term(Rational(1, 1000000000), 2);
  CHECK(compare(lhs, rhs) == Cmp::Less);
  // 2^1000001 vs huge power tie-breaks exactly even with big exponents.
  CHECK(compare(term(100000, 2), term(50000, 4)) == Cmp::Equal);
  CHECK(compare(term(100001, 2), term(50000, 4)) == Cmp::Greater);
}

TEST_CASE("scaled accumulation matches the sum of parts") {
  LogExpr a = term(2, 5);
  LogExpr b = term(1, 5);
  LogExpr acc;
  acc.add(a);             // + 2 log 5
  acc.add(b, Rational(-2));  // - 2 log 5
  CHECK(sign_of(acc) == Cmp::Equal);
  acc.add(b, Rational(1, 3));
  CHECK(sign_of(acc) == Cmp::Greater);
  CHECK(acc.approx() == doctest::Approx(std::log(5.0) / 3.0));
}

TEST_CASE("starting precision knob clamps and never changes verdicts") {
  unsigned prev = set_interval_start_bits(256);
  CHECK(prev == 128);  // library default
  CHECK(interval_start_bits() == 256);
  CHECK(set_interval_start_bits(10) == 256);
  CHECK(interval_start_bits() == 64);  // clamped up
  CHECK(set_interval_start_bits(100000) == 64);
  CHECK(interval_start_bits() == 4096);  // clamped down
  CHECK(compare(term(3, 2), term(1, 8)) == Cmp::Equal);
  CHECK(compare(term(2, 3), term(3, 2)) == Cmp::Greater);
  set_interval_start_bits(prev);
  CHECK(interval_start_bits() == 128);
}
