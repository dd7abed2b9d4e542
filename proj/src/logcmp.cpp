#include "logcmp.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>

#include "heights.hpp"

namespace sunitgcd {

void LogExpr::add_term(const Rational& coeff, const Rational& base) {
  if (base <= 0) throw DomainError("log term with nonpositive base");
  if (coeff == 0 || base == 1) return;
  terms_.emplace_back(coeff, base);
}

void LogExpr::add(const LogExpr& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [c, b] : other.terms_) terms_.emplace_back(c * scale, b);
}

double LogExpr::approx() const {
  double s = 0;
  for (const auto& [c, b] : terms_) s += c.get_d() * log_approx(b);
  return s;
}

namespace {

thread_local unsigned g_start_bits = 128;

// Interval sign evaluation at the given precision: -1, 0 (straddles), +1.
int interval_sign(const std::vector<std::pair<Rational, Rational>>& terms,
                  unsigned bits) {
  mpfr_t lo, hi, t_lo, t_hi, tmp;
  mpfr_inits2(bits, lo, hi, t_lo, t_hi, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (const auto& [c, b] : terms) {
    // [t_lo, t_hi] encloses log(b).
    mpfr_set_q(tmp, b.get_mpq_t(), MPFR_RNDD);
    mpfr_log(t_lo, tmp, MPFR_RNDD);
    mpfr_set_q(tmp, b.get_mpq_t(), MPFR_RNDU);
    mpfr_log(t_hi, tmp, MPFR_RNDU);
    if (c >= 0) {
      mpfr_mul_q(t_lo, t_lo, c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(t_hi, t_hi, c.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_swap(t_lo, t_hi);
      mpfr_mul_q(t_lo, t_lo, c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(t_hi, t_hi, c.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add(lo, lo, t_lo, MPFR_RNDD);
    mpfr_add(hi, hi, t_hi, MPFR_RNDU);
  }
  int out = 0;
  if (mpfr_sgn(lo) > 0)
    out = 1;
  else if (mpfr_sgn(hi) < 0)
    out = -1;
  mpfr_clears(lo, hi, t_lo, t_hi, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Exact sign of sum c_i log b_i: clear coefficient denominators, then
// compare the integer products prod b_i^(e_i) cross-multiplied.
int exact_sign(const std::vector<std::pair<Rational, Rational>>& terms) {
  // Merge by base so repeated bases (heights reused across terms) cancel.
  std::map<Rational, Rational> merged;
  Integer L = 1;
  for (const auto& [c, b] : terms) {
    merged[b] += c;
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer lhs = 1, rhs = 1;  // sign of log(lhs/rhs)
  for (const auto& [b, c] : merged) {
    Rational e = c * Rational(L);
    SGC_CHECK(e.get_den() == 1);
    Integer ei = e.get_num();
    if (ei == 0) continue;
    unsigned long mag;
    SGC_CHECK_MSG(mpz_fits_ulong_p(Integer(abs(ei)).get_mpz_t()),
                  "exponent too large for exact comparison");
    mag = mpz_get_ui(Integer(abs(ei)).get_mpz_t());
    if (ei > 0) {
      lhs *= ipow(b.get_num(), mag);
      rhs *= ipow(b.get_den(), mag);
    } else {
      lhs *= ipow(b.get_den(), mag);
      rhs *= ipow(b.get_num(), mag);
    }
  }
  return cmp(lhs, rhs);
}

}  // namespace

Cmp compare(const LogExpr& lhs, const LogExpr& rhs, CompareStats* stats) {
  LogExpr diff = lhs;
  diff.add(rhs, Rational(-1));
  return sign_of(diff, stats);
}

unsigned set_interval_start_bits(unsigned bits) {
  const unsigned previous = g_start_bits;
  g_start_bits = std::clamp(bits, 64u, 4096u);
  return previous;
}

unsigned interval_start_bits() { return g_start_bits; }

Cmp sign_of(const LogExpr& expr, CompareStats* stats) {
  CompareStats local;
  const unsigned max_bits = std::max(1024u, g_start_bits);
  for (unsigned bits = g_start_bits; bits <= max_bits; bits *= 2) {
    local.bits_used = bits;
    int s = interval_sign(expr.terms(), bits);
    if (s != 0) {
      if (stats) *stats = local;
      return s > 0 ? Cmp::Greater : Cmp::Less;
    }
  }
  local.exact_fallback = true;
  if (stats) *stats = local;
  int s = exact_sign(expr.terms());
  return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

}  // namespace sunitgcd
