#include "gcdcore.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace sunitgcd {

namespace {

// Nonzero entries of (a, b); error when both vanish.
std::vector<Rational> nonzero_values(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw DomainError("common zero");
  std::vector<Rational> values;
  if (a != 0) values.push_back(a);
  if (b != 0) values.push_back(b);
  return values;
}

Rational height_max(const Rational& u, const Rational& v) {
  return std::max(height_rational(u).mult, height_rational(v).mult);
}

// lhs accumulating -log(finite_part) + log(arch_mult).
LogExpr logminus_expr(const LogMinusSum& lm) {
  LogExpr e;
  e.add_term(-1, Rational(lm.finite_part));
  e.add_term(1, lm.arch_mult);
  return e;
}

InequalityReport finish_report(IneqTag tag, const Rational& u,
                               const Rational& v, const Rational& epsilon,
                               LogExpr lhs, LogExpr rhs) {
  InequalityReport report;
  report.tag = tag;
  report.u = u;
  report.v = v;
  report.epsilon = epsilon;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.relation = compare(report.lhs, report.rhs, &report.stats);
  report.satisfied = report.relation == Cmp::Less;
  return report;
}

}  // namespace

const char* ineq_tag_name(IneqTag tag) {
  switch (tag) {
    case IneqTag::HeightVsMax:
      return "height-vs-max";
    case IneqTag::GcdVsMax:
      return "gcd-vs-max";
    case IneqTag::ValueVsMonomials:
      return "value-vs-monomials";
    case IneqTag::ValueVsCoordinates:
      return "value-vs-coordinates";
    case IneqTag::UnitShiftAll:
      return "unit-shift-all";
    case IneqTag::UnitShiftOutsideS:
      return "unit-shift-outside-s";
    case IneqTag::SplitOutsideS:
      return "split-outside-s";
    case IneqTag::SplitAll:
      return "split-all";
  }
  throw InternalError("unknown inequality tag");
}

LogMinusSum gcd_analogue(const LaurentPoly2& p, const LaurentPoly2& q,
                         const Rational& u, const Rational& v,
                         const PlaceFilter& filter) {
  const auto values = nonzero_values(p.eval(u, v), q.eval(u, v));
  return logminus_sum(values, filter);
}

Integer integer_gcd_bridge(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw DomainError("gcd bridge requires nonzero input");
  const std::vector<Rational> values{Rational(a), Rational(b)};
  LogMinusSum lm = logminus_sum(values, FilterFiniteOnly{});
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  SGC_CHECK_MSG(lm.finite_part == g,
                "finite log^- part disagrees with the integer gcd");
  return g;
}

DecompositionWitness decomposition_identity(const Rational& p_value,
                                            const Rational& q_value) {
  const auto values = nonzero_values(p_value, q_value);
  DecompositionWitness w;
  const std::vector<Rational> with_one{p_value, q_value, Rational(1)};
  const std::vector<Rational> pair{p_value, q_value};
  w.h_proj3 = height_projective(with_one).mult;
  w.h_proj2 = height_projective(pair).mult;
  LogMinusSum lm = logminus_sum(values, FilterAll{});
  w.m = lm.finite_part;
  w.arch = lm.arch_mult;
  w.holds = w.h_proj3 * w.arch == w.h_proj2 * Rational(w.m);
  return w;
}

DecompositionWitness decomposition_identity(const LaurentPoly2& p,
                                            const LaurentPoly2& q,
                                            const Rational& u,
                                            const Rational& v) {
  return decomposition_identity(p.eval(u, v), q.eval(u, v));
}

InequalityReport check_height_gap(const LaurentPoly2& p, const LaurentPoly2& q,
                                  const Rational& u, const Rational& v,
                                  const Rational& epsilon) {
  const Rational pv = p.eval(u, v);
  const Rational qv = q.eval(u, v);
  if (qv == 0)
    throw PoleError("pole at (" + format_rational(u) + ", " +
                    format_rational(v) + ")");
  const std::vector<Rational> with_one{pv, qv, Rational(1)};
  LogExpr lhs, rhs;
  lhs.add_term(1, height_rational(pv / qv).mult);
  rhs.add_term(1, height_projective(with_one).mult);
  rhs.add_term(-epsilon, height_max(u, v));
  return finish_report(IneqTag::HeightVsMax, u, v, epsilon, std::move(lhs),
                       std::move(rhs));
}

InequalityReport check_height_gap_gcdform(const LaurentPoly2& p,
                                          const LaurentPoly2& q,
                                          const Rational& u, const Rational& v,
                                          const Rational& epsilon) {
  LogExpr lhs = logminus_expr(gcd_analogue(p, q, u, v, FilterAll{}));
  LogExpr rhs;
  rhs.add_term(-epsilon, height_max(u, v));
  return finish_report(IneqTag::GcdVsMax, u, v, epsilon, std::move(lhs),
                       std::move(rhs));
}

bool height_gap_forms_agree(const LaurentPoly2& p, const LaurentPoly2& q,
                            const Rational& u, const Rational& v,
                            const Rational& epsilon) {
  const InequalityReport a = check_height_gap(p, q, u, v, epsilon);
  const InequalityReport b = check_height_gap_gcdform(p, q, u, v, epsilon);
  return a.relation == b.relation && a.satisfied == b.satisfied;
}

// Plain libm log on nearest doubles: the reporting ratio must be
// reproducible by an independent double-precision reimplementation, so it
// avoids the higher-precision log path used for verdicts.
double ShiftRatioReport::ratio() const {
  const double denom = std::log(nearest_double(h_point.mult));
  if (denom == 0.0) return 0.0;
  return std::log(nearest_double(h_ratio.mult)) / denom;
}

namespace {

ShiftRatioReport shift_ratio_impl(
    const Rational& u, const Rational& v,
    std::optional<MultiplicativeRelation> relation) {
  if (u == 1 || v == 1)
    throw DomainError("shift ratio requires u != 1 and v != 1");
  ShiftRatioReport report;
  report.u = u;
  report.v = v;
  report.h_ratio = height_rational((u - 1) / (v - 1));
  const std::vector<Rational> point{Rational(1), u, v};
  report.h_point = height_projective(point);
  report.dependent = relation.has_value();
  report.relation = std::move(relation);
  return report;
}

}  // namespace

ShiftRatioReport check_shift_ratio(const SUnit& u, const SUnit& v) {
  return shift_ratio_impl(u.value(), v.value(), dependence(u, v));
}

ShiftRatioReport check_shift_ratio(const Rational& u, const Rational& v,
                                   const FactorConfig& cfg) {
  return shift_ratio_impl(u, v, rational_dependence(u, v, cfg));
}

MonomialMaxReports check_monomial_max(const RationalFunction2& f,
                                      const Rational& u, const Rational& v,
                                      const Rational& epsilon) {
  const MonomialSet support = f.monomials();
  if (!support.contains_one)
    throw DomainError("monomial 1 required in the support");
  const Rational value = f.eval(u, v);  // PoleError on vanishing denominator
  const Rational h_value = height_rational(value).mult;

  Rational h_max_monomial = 1;  // the constant monomial contributes H = 1
  for (const auto& [i, j] : support.points) {
    const Rational t = rational_pow(u, i) * rational_pow(v, j);
    h_max_monomial = std::max(h_max_monomial, height_rational(t).mult);
  }

  const Rational one_minus_eps = Rational(1) - epsilon;
  LogExpr lhs14, rhs14;
  lhs14.add_term(1, h_value);
  rhs14.add_term(one_minus_eps, h_max_monomial);

  const long deg_x = f.deg_x();
  const long deg_y = f.deg_y();
  if (deg_x == 0 || deg_y == 0)
    throw DomainError("coordinate form undefined: degree zero in X or Y");
  LogExpr side_u, side_v;
  side_u.add_term(Rational(1, 2 * deg_y), height_rational(u).mult);
  side_v.add_term(Rational(1, 2 * deg_x), height_rational(v).mult);
  const LogExpr& larger =
      compare(side_u, side_v) == Cmp::Less ? side_v : side_u;
  LogExpr lhs15, rhs15;
  lhs15.add_term(1, h_value);
  rhs15.add(larger, one_minus_eps);

  MonomialMaxReports out{
      finish_report(IneqTag::ValueVsMonomials, u, v, epsilon, std::move(lhs14),
                    std::move(rhs14)),
      finish_report(IneqTag::ValueVsCoordinates, u, v, epsilon,
                    std::move(lhs15), std::move(rhs15))};
  return out;
}

UnitShiftReports check_unit_shift(const Rational& u, const Rational& v,
                                  const Rational& epsilon, const PlaceSet& s) {
  if (u == 1 || v == 1)
    throw DomainError("unit shift requires u != 1 and v != 1");
  const std::vector<Rational> values{u - 1, v - 1};
  const Rational h_max = height_max(u, v);

  LogExpr lhs_all = logminus_expr(logminus_sum(values, FilterAll{}));
  LogExpr rhs_all;
  rhs_all.add_term(-epsilon, h_max);

  LogExpr lhs_out =
      logminus_expr(logminus_sum(values, FilterComplementOf{s}));
  LogExpr rhs_out;
  rhs_out.add_term(-epsilon / 2, h_max);

  UnitShiftReports out{
      finish_report(IneqTag::UnitShiftAll, u, v, epsilon, std::move(lhs_all),
                    std::move(rhs_all)),
      finish_report(IneqTag::UnitShiftOutsideS, u, v, epsilon,
                    std::move(lhs_out), std::move(rhs_out))};
  return out;
}

InequalityReport check_split_pair(const QPoly& r, const QPoly& s,
                                  const Rational& u, const Rational& v,
                                  const Rational& epsilon, const PlaceSet& set,
                                  SplitPlaces places) {
  if (places == SplitPlaces::All && r.at(0) == 0 && s.at(0) == 0)
    throw DomainError(
        "all-places split requires r and s to not both vanish at 0");
  const Rational zero(0);
  const Rational rv = eval_upoly(r, u, zero);
  const Rational sv = eval_upoly(s, v, zero);
  const auto values = nonzero_values(rv, sv);
  const PlaceFilter filter =
      places == SplitPlaces::All ? PlaceFilter(FilterAll{})
                                 : PlaceFilter(FilterComplementOf{set});
  LogExpr lhs = logminus_expr(logminus_sum(values, filter));
  LogExpr rhs;
  rhs.add_term(-epsilon, height_max(u, v));
  return finish_report(places == SplitPlaces::All ? IneqTag::SplitAll
                                                  : IneqTag::SplitOutsideS,
                       u, v, epsilon, std::move(lhs), std::move(rhs));
}

ResultantChainWitness resultant_chain(const LaurentPoly2& p,
                                      const LaurentPoly2& q, const Rational& u,
                                      const Rational& v, const PlaceSet& s) {
  ResultantChainWitness w;
  const PlaceFilter outside = FilterComplementOf{s};
  w.m_values = gcd_analogue(p, q, u, v, outside).finite_part;

  const QPoly r = to_qpoly_x(resultant_y(p, q));
  const QPoly sy = to_qpoly_y(resultant_x(p, q));
  const Rational zero(0);
  const Rational rv = eval_upoly(r, u, zero);
  const Rational sv = eval_upoly(sy, v, zero);
  if (rv == 0 && sv == 0) {
    w.degenerate = true;
    w.holds = true;  // both resultants vanish: the divisibility is vacuous
    return w;
  }
  std::vector<Rational> values;
  if (rv != 0) values.push_back(rv);
  if (sv != 0) values.push_back(sv);
  w.m_resultants = logminus_sum(values, outside).finite_part;
  w.holds =
      mpz_divisible_p(w.m_resultants.get_mpz_t(), w.m_values.get_mpz_t()) != 0;
  return w;
}

}  // namespace sunitgcd
