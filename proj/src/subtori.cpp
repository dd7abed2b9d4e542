#include "subtori.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace sunitgcd {

const char* provenance_name(const Provenance& p) {
  if (std::holds_alternative<FromSupportPair>(p)) return "support";
  if (std::holds_alternative<FromDirectionBound>(p)) return "bounded";
  return "translated";
}

void CandidateSet::insert(const MultiplicativeRelation& rel,
                          Provenance provenance) {
  auto it = std::lower_bound(
      items_.begin(), items_.end(), rel,
      [](const Candidate& c, const MultiplicativeRelation& r) {
        return c.rel < r;
      });
  if (it != items_.end() && it->rel == rel) return;  // first wins
  items_.insert(it, Candidate{rel, std::move(provenance)});
}

bool CandidateSet::contains(const MultiplicativeRelation& rel) const {
  auto it = std::lower_bound(
      items_.begin(), items_.end(), rel,
      [](const Candidate& c, const MultiplicativeRelation& r) {
        return c.rel < r;
      });
  return it != items_.end() && it->rel == rel;
}

std::optional<MultiplicativeRelation> CandidateSet::first_match(
    const Rational& u, const Rational& v) const {
  for (const Candidate& c : items_)
    if (on_subtorus(u, v, c.rel)) return c.rel;
  return std::nullopt;
}

CandidateSet support_candidates(const MonomialSet& t) {
  CandidateSet out;
  const auto& pts = t.points;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const long di = pts[b].first - pts[a].first;
      const long dj = pts[b].second - pts[a].second;
      const long g = std::gcd(di, dj);
      SGC_CHECK(g > 0);  // points are distinct
      out.insert(canonical_relation(di / g, dj / g, 1),
                 FromSupportPair{pts[a], pts[b]});
    }
  }
  return out;
}

namespace {

// floor(1/eps) for eps > 0, as a machine integer.
long direction_bound(const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  const Rational inverse = 1 / epsilon;
  Integer b;
  mpz_fdiv_q(b.get_mpz_t(), inverse.get_num_mpz_t(),
             inverse.get_den_mpz_t());
  SGC_CHECK_MSG(b.fits_slong_p(), "direction bound too large");
  return b.get_si();
}

}  // namespace

CandidateSet bounded_candidates(const Rational& epsilon) {
  const long bound = direction_bound(epsilon);
  CandidateSet out;
  for (long p = 0; p <= bound; ++p) {
    for (long q = -bound; q <= bound; ++q) {
      if (p == 0 && q <= 0) continue;  // canonical: p > 0, or p = 0, q > 0
      if (std::gcd(p, q) != 1) continue;
      out.insert(MultiplicativeRelation{p, q, 1}, FromDirectionBound{});
    }
  }
  return out;
}

CandidateSet translated_candidates(const Rational& theta, const Rational& eta,
                                   const Rational& epsilon) {
  if (theta == 0 || eta == 0)
    throw DomainError("translate point must have nonzero coordinates");
  CandidateSet out;
  for (const Candidate& c : bounded_candidates(epsilon).items()) {
    const Rational w =
        rational_pow(theta, c.rel.p) * rational_pow(eta, c.rel.q);
    out.insert(MultiplicativeRelation{c.rel.p, c.rel.q, w},
               FromScaledPoint{theta, eta});
  }
  return out;
}

namespace {

// Exact rational d-th root of x, when one exists (d >= 1).
std::optional<Rational> rational_root(const Rational& x, long d,
                                      const FactorConfig& cfg) {
  SGC_CHECK(d >= 1);
  if (x == 0) return Rational(0);
  if (d == 1) return x;
  if (x < 0 && d % 2 == 0) return std::nullopt;
  Rational magnitude = 1;
  for (const auto& [prime, e] : factor(x.get_num(), cfg)) {
    if (e % d != 0) return std::nullopt;
    magnitude *= rational_pow(Rational(prime), e / d);
  }
  for (const auto& [prime, e] : factor(x.get_den(), cfg)) {
    if (e % d != 0) return std::nullopt;
    magnitude /= rational_pow(Rational(prime), e / d);
  }
  return x < 0 ? -magnitude : magnitude;
}

}  // namespace

std::vector<Rational> cancellation_constants(const LaurentPoly2& f, long p,
                                             long q,
                                             const FactorConfig& cfg) {
  if (p == 0 && q == 0) throw DomainError("direction must be nonzero");
  if (std::gcd(p, q) != 1) throw DomainError("direction must be primitive");
  // Support points grouped by collapse degree l = q*i - p*j.
  std::map<long, std::vector<std::pair<Exponent, Rational>>> groups;
  for (const auto& [e, a] : f.terms())
    groups[q * e.first - p * e.second].push_back({e, a});
  std::vector<Rational> out;
  for (const auto& [l, terms] : groups) {
    if (terms.size() != 2) continue;
    const auto& [e1, a1] = terms[0];
    const auto& [e2, a2] = terms[1];
    long j1 = e1.second, j2 = e2.second;
    Rational ratio = -a2 / a1;  // a1 * w^j1 + a2 * w^j2 = 0, solve for w
    if (j1 == j2) continue;     // degenerate: cancels for all or no wbar
    if (j1 < j2) {
      std::swap(j1, j2);
      ratio = 1 / ratio;  // -a1/a2 when the larger exponent is on a2
    }
    if (auto w = rational_root(ratio, j1 - j2, cfg); w && *w != 0)
      out.push_back(*w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* point_class_name(PointClassKind kind) {
  switch (kind) {
    case PointClassKind::OnCandidate:
      return "on-candidate";
    case PointClassKind::DependentSporadic:
      return "dependent-sporadic";
    case PointClassKind::Independent:
      return "independent";
  }
  throw InternalError("unknown point class");
}

PointClass classify_point(const Rational& u, const Rational& v,
                          const CandidateSet& candidates,
                          const FactorConfig& cfg) {
  if (auto rel = candidates.first_match(u, v))
    return PointClass{PointClassKind::OnCandidate, rel};
  if (auto rel = rational_dependence(u, v, cfg))
    return PointClass{PointClassKind::DependentSporadic, rel};
  return PointClass{PointClassKind::Independent, std::nullopt};
}

}  // namespace sunitgcd
