#pragma once

// Numerical instrumentation of the auxiliary-point construction behind the
// outside-S bound: parameter selection (k, h and the derived budget), the
// big evaluation point P(u, v), the linear forms attached to it, the double
// product over the places of S in exact factored form, and the three-step
// inequality ledger that bounds it.  Everything finite-place is exact; the
// archimedean contributions stay exact rationals too (absolute values of
// rationals), so the ledger rows are decided rigorously.

#include <string>
#include <vector>

#include "gcdcore.hpp"
#include "heights.hpp"
#include "logcmp.hpp"
#include "qplaces.hpp"
#include "rational.hpp"
#include "sunits.hpp"

namespace sunitgcd {

// Exponent budget: k repetitions of the shifted form, h tail powers per
// column, n = h*k + h + k coordinates, and the derived slack
// epsilon0 = eps*h*k/2 - h - 2k^2 > 0 with delta = epsilon0/(h + k + 3).
struct ProofParams {
  Rational epsilon;
  long k = 0;
  long h = 0;
  long n = 0;
  Rational epsilon0;
  Rational delta;
};

// Smallest k with k > 4/eps, then smallest h with h > 2k^2 + 1 and
// epsilon0 > 0; derived n, epsilon0, delta.  eps must be positive.
ProofParams choose_params(const Rational& epsilon);

// Re-checks the constraint set on an arbitrary parameter tuple.
bool params_valid(const ProofParams& p);

// The auxiliary point P(u, v) = (z_1..z_k, then u^j v^-i for j = 0..k,
// i = 1..h) with z_j = (u^j - 1)/(v - 1).  Requires v != 1.  The geometric
// series identity z_j = z_1 * (u^{j-1} + ... + u + 1) is hard-asserted for
// every j during construction.
struct AuxPoint {
  Rational u, v;
  long k = 0;
  long h = 0;
  std::vector<Rational> coordinates;

  long n() const { return k + (k + 1) * h; }
  const Rational& z(long j) const;          // 1-based, j <= k
  const Rational& y(long j, long i) const;  // u^j v^-i, j in 0..k, i in 1..h
  // Value of the special linear form: (u^j - 1) * v^-h / (v - 1).
  Rational special_form_value(long j) const;
};
AuxPoint build_point(const Rational& u, const Rational& v, long k, long h);

// Places of S split by whether |v|_mu > 1.
struct SPartition {
  std::vector<Place> s_plus;
  std::vector<Place> s_minus;

  static SPartition of(const Rational& v, const PlaceSet& s);
  bool in_plus(const Place& place) const;
};

// Exact |L_{j,mu}(P)|_mu for every j = 1..n and every place of S
// (archimedean first).  For j <= k and mu in S+, the form is the shifted
// combination z_j + sum_i y_{0,i} - sum_i y_{j,i}, whose value is asserted
// to equal the closed form special_form_value(j) exactly; all other forms
// are coordinate projections.
struct LinearFormValues {
  std::vector<Place> places;
  std::vector<std::vector<Rational>> abs_values;  // [place][j-1]
};
LinearFormValues linear_form_values(const AuxPoint& p,
                                    const SPartition& partition);

// prod_{j=1..n} prod_{mu in S} |L_{j,mu}(P)|_mu / |P|_mu in exact factored
// form: the special-form block and the tail block are exact rationals, and
// the point factor prod_{mu in S} |P|_mu enters with exponent -n.
struct DoubleProductLedger {
  bool vanishes = false;     // some involved linear form value is 0
  Rational special_part = 1; // prod_{j<=k} prod_{mu in S} |L_{j,mu}|_mu
  Rational tail_part = 1;    // prod_{j>k} prod_{mu in S} |L_{j,mu}|_mu
  Rational p_s = 1;          // prod_{mu in S} |P|_mu
  long n = 0;

  LogExpr log_form() const;  // log special + log tail - n * log p_s
  double log_value() const { return log_form().approx(); }
};
DoubleProductLedger double_product(const AuxPoint& p,
                                   const SPartition& partition,
                                   const PlaceSet& s);

// One inequality row: double product <= rhs, decided rigorously.
struct ChainRow {
  std::string name;
  LogExpr lhs, rhs;
  bool requires_hypothesis = false;
  bool checked = false;  // evaluated (point buildable, prerequisites known)
  bool holds = false;
  Cmp relation = Cmp::Equal;
};

// Full ledger for a pair of S-units: hypothesis status (the outside-S
// inequality at the given epsilon, after the H(v) >= H(u) symmetry swap),
// the exact double product, and the three bound rows:
//   unconditional-bound:  ... <= H(P)^-n * Pout^n * H(v)^-hk
//                                 * (2 H(u))^(k^2) * H(1-v)^k
//   hypothesis-bound:     ... <= H(P)^-n * H(v)^((1-eps/2)n - hk)
//                                 * 2^n * (2 H(v))^(k^2+k)
//   final-bound:          ... <= H(P)^-n * H(v)^-epsilon0 * 2^(n+k+k^2)
// where Pout = prod_{mu not in S} |P|_mu.  The hypothesis rows are checked
// only when the outside-S inequality holds; the final row additionally
// needs k >= 2.
struct ChainLedger {
  ProofParams params;
  Rational u, v;  // after the symmetry swap
  bool swapped = false;
  bool hypothesis_met = false;
  std::string hypothesis_note;
  bool point_built = false;
  bool tail_forms_unit = false;  // exact: tail block equals 1
  DoubleProductLedger product;
  std::vector<ChainRow> rows;
  bool all_checked_hold = false;
};
ChainLedger verify_chain(const SUnit& u, const SUnit& v,
                         const ProofParams& params, const PlaceSet& s);

// Exact two-sided bound on the height of the auxiliary point:
// H(P) <= 2 * H(u)^k * H(v)^(h+1) <= H(v)^(h+k+2), meaningful when
// H(v) >= 2 and H(v) >= H(u) (preconditions reported, not enforced).
struct AuxHeightBound {
  Rational h_point;      // H(P), exact
  Rational bound_mid;    // 2 * H(u)^k * H(v)^(h+1)
  Rational bound_final;  // H(v)^(h+k+2)
  bool preconditions_met = false;
  bool holds = false;  // both exact comparisons
};
AuxHeightBound aux_height_bound(const Rational& u, const Rational& v,
                                const ProofParams& params);

}  // namespace sunitgcd
