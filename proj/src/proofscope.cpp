#include "proofscope.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sunitgcd {

namespace {

// floor(a/b) for exact rationals, as an Integer.
Integer floor_div(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

long to_long(const Integer& x, const char* what) {
  SGC_CHECK_MSG(x.fits_slong_p(), std::string(what) + " out of range");
  return x.get_si();
}

}  // namespace

ProofParams choose_params(const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  ProofParams out;
  out.epsilon = epsilon;
  // Smallest integer strictly above 4/eps.
  out.k = to_long(floor_div(Rational(4) / epsilon) + 1, "k");
  // Smallest h with h > 2k^2 + 1 and eps*h*k/2 - h - 2k^2 > 0.  The slack
  // grows in h because eps*k/2 > 2 > 1, so the minimum is a two-way max.
  const Rational k(out.k);
  const Rational slope = epsilon * k / 2 - 1;
  SGC_CHECK(slope > 0);
  const Integer h_size = Integer(2) * out.k * out.k + 2;
  const Integer h_slack = floor_div(Rational(2) * k * k / slope) + 1;
  out.h = to_long(std::max(h_size, h_slack), "h");
  const Integer n =
      Integer(out.h) * out.k + Integer(out.h) + Integer(out.k);
  out.n = to_long(n, "n");
  out.epsilon0 = epsilon * out.h * out.k / 2 - out.h -
                 Rational(2) * out.k * out.k;
  out.delta = out.epsilon0 / Rational(out.h + out.k + 3);
  SGC_CHECK(params_valid(out));
  return out;
}

bool params_valid(const ProofParams& p) {
  if (p.epsilon <= 0 || p.k <= 0 || p.h <= 0) return false;
  if (Rational(p.k) * p.epsilon <= 4) return false;  // k > 4/eps
  if (Integer(p.h) <= Integer(2) * p.k * p.k + 1) return false;  // h > 2k^2+1
  if (Integer(p.n) != Integer(p.h) * p.k + p.h + p.k) return false;
  const Rational eps0 =
      p.epsilon * p.h * p.k / 2 - p.h - Rational(2) * p.k * p.k;
  if (eps0 != p.epsilon0 || eps0 <= 0) return false;
  return p.delta == eps0 / Rational(p.h + p.k + 3);
}

const Rational& AuxPoint::z(long j) const {
  SGC_CHECK(j >= 1 && j <= k);
  return coordinates[static_cast<std::size_t>(j - 1)];
}

const Rational& AuxPoint::y(long j, long i) const {
  SGC_CHECK(j >= 0 && j <= k && i >= 1 && i <= h);
  return coordinates[static_cast<std::size_t>(k + j * h + (i - 1))];
}

Rational AuxPoint::special_form_value(long j) const {
  return (rational_pow(u, j) - 1) * rational_pow(v, -h) / (v - 1);
}

AuxPoint build_point(const Rational& u, const Rational& v, long k, long h) {
  if (v == 1) throw DomainError("z undefined: v = 1");
  if (k <= 0 || h <= 0) throw DomainError("k and h must be positive");
  if (u == 0 || v == 0) throw DomainError("u and v must be nonzero");
  AuxPoint p;
  p.u = u;
  p.v = v;
  p.k = k;
  p.h = h;
  p.coordinates.reserve(static_cast<std::size_t>(p.n()));
  Rational u_pow = 1;
  for (long j = 1; j <= k; ++j) {
    u_pow *= u;
    p.coordinates.push_back((u_pow - 1) / (v - 1));
  }
  // Geometric series identity: z_j = z_1 * (u^{j-1} + ... + u + 1).
  Rational series = 0;
  Rational term = 1;
  for (long j = 1; j <= k; ++j) {
    series += term;
    term *= u;
    SGC_CHECK_MSG(p.z(j) == p.z(1) * series,
                  "geometric series identity failed");
  }
  const Rational v_inv = 1 / v;
  u_pow = 1;
  for (long j = 0; j <= k; ++j) {
    Rational coord = u_pow;
    for (long i = 1; i <= h; ++i) {
      coord *= v_inv;
      p.coordinates.push_back(coord);
    }
    u_pow *= u;
  }
  SGC_CHECK(static_cast<long>(p.coordinates.size()) == p.n());
  return p;
}

SPartition SPartition::of(const Rational& v, const PlaceSet& s) {
  if (v == 0) throw DomainError("partition requires v != 0");
  SPartition out;
  for (const Place& place : s.places()) {
    if (abs_at(v, place) > 1)
      out.s_plus.push_back(place);
    else
      out.s_minus.push_back(place);
  }
  return out;
}

bool SPartition::in_plus(const Place& place) const {
  return std::find(s_plus.begin(), s_plus.end(), place) != s_plus.end();
}

LinearFormValues linear_form_values(const AuxPoint& p,
                                    const SPartition& partition) {
  LinearFormValues out;
  for (const Place& place : partition.s_minus) out.places.push_back(place);
  for (const Place& place : partition.s_plus) out.places.push_back(place);
  std::sort(out.places.begin(), out.places.end(),
            [](const Place& a, const Place& b) {
              if (a.archimedean != b.archimedean) return a.archimedean;
              return a.prime < b.prime;
            });

  // The shifted forms expand, coordinate by coordinate, to the closed form.
  std::vector<Rational> special;
  for (long j = 1; j <= p.k; ++j) {
    Rational direct = p.z(j);
    for (long i = 1; i <= p.h; ++i) direct += p.y(0, i) - p.y(j, i);
    SGC_CHECK_MSG(direct == p.special_form_value(j),
                  "closed form disagrees with the coordinate expansion");
    special.push_back(direct);
  }

  for (const Place& place : out.places) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(p.n()));
    const bool plus = partition.in_plus(place);
    for (long j = 1; j <= p.k; ++j)
      row.push_back(abs_at(
          plus ? special[static_cast<std::size_t>(j - 1)] : p.z(j), place));
    for (long j = p.k + 1; j <= p.n(); ++j)
      row.push_back(
          abs_at(p.coordinates[static_cast<std::size_t>(j - 1)], place));
    out.abs_values.push_back(std::move(row));
  }
  return out;
}

LogExpr DoubleProductLedger::log_form() const {
  SGC_CHECK_MSG(!vanishes, "double product is zero; no log form");
  LogExpr e;
  e.add_term(1, special_part);
  e.add_term(1, tail_part);
  e.add_term(-Rational(n), p_s);
  return e;
}

DoubleProductLedger double_product(const AuxPoint& p,
                                   const SPartition& partition,
                                   const PlaceSet& s) {
  DoubleProductLedger out;
  out.n = p.n();
  const std::vector<Place> places = s.places();

  // |P|_mu per place of S: max_i |x_i|_mu.
  for (const Place& place : places) {
    Rational best = 0;
    for (const Rational& x : p.coordinates)
      best = std::max(best, abs_at(x, place));
    SGC_CHECK(best > 0);
    out.p_s *= best;
  }

  // Special block: for j <= k the form value is the closed form at S+
  // places and the coordinate z_j elsewhere.
  for (long j = 1; j <= p.k; ++j) {
    const Rational w = p.special_form_value(j);
    for (const Place& place : places) {
      const Rational value = partition.in_plus(place) ? w : p.z(j);
      if (value == 0) {
        out.vanishes = true;
        out.special_part = 0;
        return out;
      }
      out.special_part *= abs_at(value, place);
    }
  }

  // Tail block: coordinate projections.
  for (long j = p.k + 1; j <= p.n(); ++j) {
    const Rational& x = p.coordinates[static_cast<std::size_t>(j - 1)];
    SGC_CHECK(x != 0);
    for (const Place& place : places) out.tail_part *= abs_at(x, place);
  }
  return out;
}

namespace {

ChainRow make_row(std::string name, bool requires_hypothesis,
                  const LogExpr& lhs, LogExpr rhs, bool evaluate) {
  ChainRow row;
  row.name = std::move(name);
  row.requires_hypothesis = requires_hypothesis;
  row.lhs = lhs;
  row.rhs = std::move(rhs);
  if (evaluate) {
    row.checked = true;
    row.relation = compare(row.lhs, row.rhs);
    row.holds = row.relation != Cmp::Greater;  // bound rows assert <=
  }
  return row;
}

// A row whose left side is an identically zero double product: every bound
// with positive right side holds trivially.
ChainRow vanished_row(std::string name, bool requires_hypothesis,
                      LogExpr rhs, bool evaluate) {
  ChainRow row;
  row.name = std::move(name);
  row.requires_hypothesis = requires_hypothesis;
  row.rhs = std::move(rhs);
  if (evaluate) {
    row.checked = true;
    row.relation = Cmp::Less;
    row.holds = true;
  }
  return row;
}

}  // namespace

ChainLedger verify_chain(const SUnit& u, const SUnit& v,
                         const ProofParams& params, const PlaceSet& s) {
  ChainLedger ledger;
  ledger.params = params;
  Rational uu = u.value();
  Rational vv = v.value();
  if (height_rational(vv).mult < height_rational(uu).mult) {
    std::swap(uu, vv);
    ledger.swapped = true;
  }
  ledger.u = uu;
  ledger.v = vv;

  if (uu == 1 || vv == 1) {
    ledger.hypothesis_note = "u = 1 or v = 1: shifted values vanish";
    return ledger;
  }
  const UnitShiftReports shift = check_unit_shift(uu, vv, params.epsilon, s);
  ledger.hypothesis_met = shift.outside_s.satisfied;
  if (!ledger.hypothesis_met)
    ledger.hypothesis_note = "outside-S inequality unmet at this epsilon";
  const bool k_ok = params.k >= 2;
  if (!k_ok) {
    ledger.hypothesis_note +=
        std::string(ledger.hypothesis_note.empty() ? "" : "; ") +
        "final bound requires k >= 2";
  }

  const AuxPoint point = build_point(uu, vv, params.k, params.h);
  ledger.point_built = true;
  const SPartition partition = SPartition::of(vv, s);
  ledger.product = double_product(point, partition, s);
  ledger.tail_forms_unit = ledger.product.vanishes
                               ? (ledger.product.tail_part == 1 ||
                                  ledger.product.tail_part == 0)
                               : ledger.product.tail_part == 1;

  const Rational h_point = height_affine_point(point.coordinates).mult;
  const Rational p_out = h_point / ledger.product.p_s;
  const Rational h_u = height_rational(uu).mult;
  const Rational h_v = height_rational(vv).mult;
  const Rational h_1v = height_rational(1 - vv).mult;
  const long k = params.k;
  const long h = params.h;
  const long n = params.n;

  // Unconditional split: H(P)^-n * Pout^n * H(v)^-hk * (2H(u))^k^2
  //                      * H(1-v)^k.
  LogExpr rhs_split;
  rhs_split.add_term(-Rational(n), h_point);
  rhs_split.add_term(Rational(n), p_out);
  rhs_split.add_term(-Rational(h) * k, h_v);
  rhs_split.add_term(Rational(k) * k, 2 * h_u);
  rhs_split.add_term(Rational(k), h_1v);

  // Under the outside-S hypothesis: H(P)^-n * H(v)^((1-eps/2)n - hk)
  //                                 * 2^n * (2H(v))^(k^2+k).
  LogExpr rhs_hyp;
  rhs_hyp.add_term(-Rational(n), h_point);
  rhs_hyp.add_term((1 - params.epsilon / 2) * n - Rational(h) * k, h_v);
  rhs_hyp.add_term(Rational(n), 2);
  rhs_hyp.add_term(Rational(k) * k + k, 2 * h_v);

  // Final form: H(P)^-n * H(v)^-epsilon0 * 2^(n+k+k^2).
  LogExpr rhs_final;
  rhs_final.add_term(-Rational(n), h_point);
  rhs_final.add_term(-params.epsilon0, h_v);
  rhs_final.add_term(Rational(n) + k + Rational(k) * k, 2);

  if (ledger.product.vanishes) {
    ledger.rows.push_back(
        vanished_row("unconditional-bound", false, std::move(rhs_split),
                     true));
    ledger.rows.push_back(vanished_row("hypothesis-bound", true,
                                       std::move(rhs_hyp),
                                       ledger.hypothesis_met));
    ledger.rows.push_back(vanished_row("final-bound", true,
                                       std::move(rhs_final),
                                       ledger.hypothesis_met && k_ok));
  } else {
    const LogExpr lhs = ledger.product.log_form();
    ledger.rows.push_back(
        make_row("unconditional-bound", false, lhs, std::move(rhs_split),
                 true));
    ledger.rows.push_back(make_row("hypothesis-bound", true, lhs,
                                   std::move(rhs_hyp),
                                   ledger.hypothesis_met));
    ledger.rows.push_back(make_row("final-bound", true, lhs,
                                   std::move(rhs_final),
                                   ledger.hypothesis_met && k_ok));
  }

  ledger.all_checked_hold = ledger.tail_forms_unit;
  for (const ChainRow& row : ledger.rows)
    if (row.checked && !row.holds) ledger.all_checked_hold = false;
  return ledger;
}

AuxHeightBound aux_height_bound(const Rational& u, const Rational& v,
                                const ProofParams& params) {
  const AuxPoint point = build_point(u, v, params.k, params.h);
  AuxHeightBound out;
  out.h_point = height_affine_point(point.coordinates).mult;
  const Rational h_u = height_rational(u).mult;
  const Rational h_v = height_rational(v).mult;
  out.bound_mid = 2 * rational_pow(h_u, params.k) *
                  rational_pow(h_v, params.h + 1);
  out.bound_final = rational_pow(h_v, params.h + params.k + 2);
  out.preconditions_met = h_v >= 2 && h_v >= h_u;
  out.holds = out.h_point <= out.bound_mid && out.bound_mid <= out.bound_final;
  return out;
}

}  // namespace sunitgcd
