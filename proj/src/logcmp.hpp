#pragma once

// Exact comparison of log-linear quantities sum_i c_i * log(b_i) with
// rational coefficients c_i and positive rational bases b_i.  Verdicts are
// produced by outward-rounded interval arithmetic starting at 128 fractional
// bits and doubling to 1024; an interval that still straddles zero falls
// back to cross-multiplied exact integer powers, so a comparison never
// guesses and can certify exact equality (ties are real: many height
// inequalities are tight on degenerate points).

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace sunitgcd {

class LogExpr {
 public:
  LogExpr() = default;

  // value += coeff * log(base); base must be > 0.
  void add_term(const Rational& coeff, const Rational& base);
  void add(const LogExpr& other, const Rational& scale = 1);

  const std::vector<std::pair<Rational, Rational>>& terms() const {
    return terms_;
  }
  bool empty() const { return terms_.empty(); }

  // Reporting approximation (not used for verdicts).
  double approx() const;

 private:
  std::vector<std::pair<Rational, Rational>> terms_;  // (coeff, base)
};

enum class Cmp { Less, Equal, Greater };

struct CompareStats {
  unsigned bits_used = 0;     // highest interval precision tried
  bool exact_fallback = false;
  bool undecided = false;     // never set by compare(); kept for reporting
};

// Sign of (lhs - rhs), decided rigorously.
Cmp compare(const LogExpr& lhs, const LogExpr& rhs,
            CompareStats* stats = nullptr);

// Convenience: sign of expr against zero.
Cmp sign_of(const LogExpr& expr, CompareStats* stats = nullptr);

// Starting interval precision for this thread, clamped to [64, 4096] bits.
// Returns the previous value.  Verdicts never depend on this knob (the exact
// fallback is always available); it only trades first-pass speed for retries.
unsigned set_interval_start_bits(unsigned bits);
unsigned interval_start_bits();

}  // namespace sunitgcd
