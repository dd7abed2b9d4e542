#pragma once

// Exact arithmetic base types.  All number theory in this library is done
// with arbitrary-precision integers and canonical rationals (lowest terms,
// positive denominator); the underlying representation comes from GMP.

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace sunitgcd {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den as a canonical rational; den != 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline const Integer num(const Rational& x) { return x.get_num(); }
inline const Integer den(const Rational& x) { return x.get_den(); }

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// x^e for a (possibly negative) integer exponent; x != 0 when e < 0.
inline Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0 && e < 0) throw DomainError("0 raised to a negative power");
  unsigned long a = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  Integer n = ipow(x.get_num(), a);
  Integer d = ipow(x.get_den(), a);
  if (e < 0) std::swap(n, d);
  return make_rational(n, d);
}

inline Rational abs_rational(const Rational& x) { return x >= 0 ? x : Rational(-x); }

// Parses "a" or "a/b" (optional leading '-'); rejects anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "a" when the denominator is 1, else "a/b".
std::string format_rational(const Rational& x);

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw DomainError("bad rational literal: " + text);
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw DomainError("bad rational literal: " + text);
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw DomainError("bad rational literal: " + text);
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(Integer(text));
  }
  std::string a = text.substr(0, slash), b = text.substr(slash + 1);
  check_int(a);
  check_int(b);
  return make_rational(Integer(a), Integer(b));
}

inline std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace sunitgcd
