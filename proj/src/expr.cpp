#include "expr.hpp"

#include <cctype>
#include <cstddef>

#include "errors.hpp"

namespace sunitgcd {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ParsedFunction parse() {
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      LaurentPoly2 num = parse_expr();
      expect(')', "expected ')'");
      skip_ws();
      expect('/', "expected '/' after parenthesized numerator");
      skip_ws();
      expect('(', "expected '(' starting the denominator");
      LaurentPoly2 den = parse_expr();
      expect(')', "expected ')'");
      expect_end();
      return ParsedFunction{RationalFunction2(std::move(num), std::move(den))};
    }
    LaurentPoly2 e = parse_expr();
    expect_end();
    return ParsedFunction{std::move(e)};
  }

 private:
  LaurentPoly2 parse_expr() {
    skip_ws();
    bool negate = false;
    if (!at_end() && peek() == '-') {
      negate = true;
      ++pos_;
    }
    LaurentPoly2 acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      const LaurentPoly2 rhs = parse_term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  LaurentPoly2 parse_term() {
    LaurentPoly2 acc = parse_factor();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  LaurentPoly2 parse_factor() {
    skip_ws();
    if (at_end()) fail("expected a factor (number, X, or Y)", pos_);
    const char c = peek();
    if (c == 'X' || c == 'Y') {
      ++pos_;
      long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = parse_exponent();
      }
      return c == 'X' ? LaurentPoly2::monomial(e, 0, 1)
                      : LaurentPoly2::monomial(0, e, 1);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return LaurentPoly2::constant(parse_rational_literal());
    fail("expected a factor (number, X, or Y)", pos_);
  }

  long parse_exponent() {
    const std::size_t start = pos_;
    const Integer value = parse_integer("expected integer exponent");
    if (!value.fits_slong_p()) fail("exponent too large", start);
    return value.get_si();
  }

  Rational parse_rational_literal() {
    const Integer num = parse_integer("expected a number");
    skip_ws();
    if (at_end() || peek() != '/') return Rational(num);
    ++pos_;
    skip_ws();
    const std::size_t den_start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected positive integer denominator", pos_);
    const Integer den = parse_integer("expected positive integer denominator");
    if (den == 0) fail("zero denominator in rational literal", den_start);
    return make_rational(num, den);
  }

  Integer parse_integer(const char* what) {
    std::size_t start = pos_;
    std::string digits;
    if (!at_end() && peek() == '-') {
      digits.push_back('-');
      ++pos_;
    }
    const std::size_t digits_start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (pos_ == digits_start) fail(what, start);
    return Integer(digits);
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (at_end() || peek() != c) fail(what, pos_);
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input", pos_);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what + " at byte " + std::to_string(at), at);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// One monomial with its coefficient, no leading sign: "3/2*X^2*Y^-1",
// "X*Y", "7".
std::string term_string(long i, long j, const Rational& magnitude) {
  std::string out;
  const bool has_monomial = i != 0 || j != 0;
  if (!has_monomial || magnitude != 1) out = format_rational(magnitude);
  auto append_var = [&out](char var, long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out.push_back(var);
    if (e != 1) out += "^" + std::to_string(e);
  };
  append_var('X', i);
  append_var('Y', j);
  return out;
}

}  // namespace

RationalFunction2 ParsedFunction::as_function() const {
  if (const auto* f = std::get_if<RationalFunction2>(&value)) return *f;
  return as_rational_function(std::get<LaurentPoly2>(value));
}

ParsedFunction parse_function(const std::string& text) {
  if (text.empty()) throw ParseError("empty input at byte 0", 0);
  return Parser(text).parse();
}

std::string print_polynomial(const LaurentPoly2& f) {
  if (f.zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, a] = *it;
    const bool negative = a < 0;
    if (out.empty()) {
      if (negative) out = "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_string(e.first, e.second, abs_rational(a));
  }
  return out;
}

std::string print_function(const ParsedFunction& f) {
  if (const auto* q = std::get_if<RationalFunction2>(&f.value))
    return "(" + print_polynomial(q->num()) + ")/(" +
           print_polynomial(q->den()) + ")";
  return print_polynomial(std::get<LaurentPoly2>(f.value));
}

}  // namespace sunitgcd
