#pragma once

// Text form of Laurent polynomials and rational functions in X, Y.
//
// Grammar (whitespace-insensitive):
//   func     := expr | "(" expr ")" "/" "(" expr ")"
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := rational | var | var "^" int
//   var      := "X" | "Y"
//   rational := int | int "/" posint      (int may carry a leading "-")
//
// Exponents may be negative (Laurent monomials).  Parenthesized
// subexpressions exist only at the top-level quotient; a quotient's
// numerator and denominator must be coprime polynomials with nonnegative
// exponents and a nonzero denominator.  Parse errors carry the byte offset
// of the first offending character.  Printing is canonical: terms in
// descending lexicographic exponent order, coefficients as "a/b", the
// quotient form always fully parenthesized; parse(print(x)) == x.

#include <string>
#include <variant>

#include "laurent.hpp"

namespace sunitgcd {

struct ParsedFunction {
  std::variant<LaurentPoly2, RationalFunction2> value;

  bool is_quotient() const {
    return std::holds_alternative<RationalFunction2>(value);
  }
  // Either form as a rational function (a Laurent polynomial clears its
  // negative exponents into a monomial denominator).
  RationalFunction2 as_function() const;

  bool operator==(const ParsedFunction& o) const { return value == o.value; }
};

ParsedFunction parse_function(const std::string& text);

std::string print_polynomial(const LaurentPoly2& f);
std::string print_function(const ParsedFunction& f);

}  // namespace sunitgcd
