#pragma once

// The gcd-analogue functional and the inequality testers built on it: the
// two equivalent height-vs-gcd formulations for a coprime pair (p, q), the
// monomial-maximum forms, the (u-1, v-1) special case over all places and
// outside S, the univariate split r(u), s(v), the exact height
// decomposition identity that ties the formulations together, and the
// resultant divisibility step that reduces the bivariate case to the
// univariate one.

#include <optional>
#include <utility>

#include "heights.hpp"
#include "laurent.hpp"
#include "logcmp.hpp"
#include "qplaces.hpp"
#include "rational.hpp"
#include "sunits.hpp"

namespace sunitgcd {

// Which inequality a report refers to.  Lhs/rhs are oriented so that
// "satisfied" always means lhs < rhs strictly.
enum class IneqTag {
  HeightVsMax,         // h(p/q) < h(p:q:1) - eps*max{h(u),h(v)}
  GcdVsMax,            // sum log^- max{|p|,|q|} < -eps*max{h(u),h(v)}
  ValueVsMonomials,    // h(f(u,v)) < (1-eps)*max_T h(T(u,v))
  ValueVsCoordinates,  // h(f(u,v)) < (1-eps)*max{h(u)/2degY, h(v)/2degX}
  UnitShiftAll,        // sum over all places for (u-1, v-1), slope -eps
  UnitShiftOutsideS,   // sum outside S for (u-1, v-1), slope -eps/2
  SplitOutsideS,       // sum outside S for (r(u), s(v)), slope -eps
  SplitAll             // same over all places
};

const char* ineq_tag_name(IneqTag tag);

struct InequalityReport {
  IneqTag tag;
  Rational u, v;
  Rational epsilon;
  LogExpr lhs, rhs;  // exact backing: rational-linear forms in logs
  Cmp relation = Cmp::Equal;
  bool satisfied = false;  // relation == Cmp::Less
  CompareStats stats;

  double lhs_log() const { return lhs.approx(); }
  double rhs_log() const { return rhs.approx(); }
};

// sum_mu log^- max{|p(u,v)|_mu, |q(u,v)|_mu} over the filtered places.
// Zero values are dropped (they never realize the max); both zero is an
// error ("common zero").
LogMinusSum gcd_analogue(const LaurentPoly2& p, const LaurentPoly2& q,
                         const Rational& u, const Rational& v,
                         const PlaceFilter& filter);

// For nonzero integers the finite-place gcd analogue is literally the gcd:
// asserts logminus_sum({a,b}, FiniteOnly).finite_part == gcd(|a|,|b|) and
// returns the common value.
Integer integer_gcd_bridge(const Integer& a, const Integer& b);

// Exact multiplicative form of h(P:Q:1) = h(P:Q) - sum_mu log^- max{...}:
// H(P:Q:1) * arch = H(P:Q) * M where M, arch are the finite and archimedean
// parts of the log^- sum over all places.  Must hold on every input.
struct DecompositionWitness {
  Rational h_proj3;  // H(P:Q:1)
  Rational h_proj2;  // H(P:Q)
  Integer m;         // finite part of the log^- sum
  Rational arch;     // archimedean factor min(1, max(|P|,|Q|))
  bool holds = false;
};
DecompositionWitness decomposition_identity(const Rational& p_value,
                                            const Rational& q_value);
DecompositionWitness decomposition_identity(const LaurentPoly2& p,
                                            const LaurentPoly2& q,
                                            const Rational& u,
                                            const Rational& v);

// h(p(u,v)/q(u,v)) < h(p(u,v):q(u,v):1) - eps*max{h(u),h(v)}.
// Requires q(u,v) != 0 (pole otherwise).
InequalityReport check_height_gap(const LaurentPoly2& p, const LaurentPoly2& q,
                                  const Rational& u, const Rational& v,
                                  const Rational& epsilon);

// The equivalent gcd-side form of the same inequality:
// sum_mu log^- max{|p(u,v)|,|q(u,v)|} < -eps*max{h(u),h(v)}.
InequalityReport check_height_gap_gcdform(const LaurentPoly2& p,
                                          const LaurentPoly2& q,
                                          const Rational& u, const Rational& v,
                                          const Rational& epsilon);

// Meta-assertion: both formulations give the same verdict (they must, by
// the decomposition identity); returns the common verdict.
bool height_gap_forms_agree(const LaurentPoly2& p, const LaurentPoly2& q,
                            const Rational& u, const Rational& v,
                            const Rational& epsilon);

// h((u-1)/(v-1)) against h(1:u:v), with the multiplicative dependence
// status of the pair.  Requires u != 1, v != 1.
struct ShiftRatioReport {
  Rational u, v;
  HeightValue h_ratio;  // H((u-1)/(v-1))
  HeightValue h_point;  // H(1:u:v)
  bool dependent = false;
  std::optional<MultiplicativeRelation> relation;

  // log H_ratio / log H_point; 0 when both heights are 1.
  double ratio() const;
};
ShiftRatioReport check_shift_ratio(const SUnit& u, const SUnit& v);
ShiftRatioReport check_shift_ratio(const Rational& u, const Rational& v,
                                   const FactorConfig& cfg = {});

// The two monomial-maximum inequalities for f at (u, v); requires the
// constant monomial 1 in the support of f and f defined at the point.
// The coordinate form divides by 2*deg_Y(f) and 2*deg_X(f) and is rejected
// when either degree is zero.
struct MonomialMaxReports {
  InequalityReport vs_monomials;    // against max_T h(T(u,v))
  InequalityReport vs_coordinates;  // against max{h(u)/2degY, h(v)/2degX}
};
MonomialMaxReports check_monomial_max(const RationalFunction2& f,
                                      const Rational& u, const Rational& v,
                                      const Rational& epsilon);

// The (u-1, v-1) pair: over all places with slope -eps, and outside S with
// slope -eps/2.  Requires u != 1 and v != 1.
struct UnitShiftReports {
  InequalityReport all_places;  // sum over all mu ... < -eps*max
  InequalityReport outside_s;   // sum outside S ... < -(eps/2)*max
};
UnitShiftReports check_unit_shift(const Rational& u, const Rational& v,
                                  const Rational& epsilon, const PlaceSet& s);

// Univariate split (r(u), s(v)).  The all-places variant enforces the
// structural hypothesis that r and s do not both vanish at 0.
enum class SplitPlaces { OutsideS, All };
InequalityReport check_split_pair(const QPoly& r, const QPoly& s,
                                  const Rational& u, const Rational& v,
                                  const Rational& epsilon, const PlaceSet& set,
                                  SplitPlaces places);

// Resultant reduction: outside S, the gcd analogue of (p(u,v), q(u,v))
// divides that of (r(u), s(v)) with r = Res_Y(p,q), s = Res_X(p,q) --
// exactly, as integer divisibility of the finite parts.  Degenerate flag set
// when r(u) = s(v) = 0 (the bound is vacuous there).
struct ResultantChainWitness {
  Integer m_values;      // finite part for (p(u,v), q(u,v)) outside S
  Integer m_resultants;  // finite part for (r(u), s(v)) outside S
  bool degenerate = false;
  bool holds = false;
};
ResultantChainWitness resultant_chain(const LaurentPoly2& p,
                                      const LaurentPoly2& q, const Rational& u,
                                      const Rational& v, const PlaceSet& s);

}  // namespace sunitgcd
