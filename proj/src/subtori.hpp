#pragma once

// Candidate one-dimensional subtori/translates of the two-torus along which
// a monomial support can collapse, and classification of scanned points
// against them.  Three effective generators: collision directions of a
// support, all coprime directions within a bound, and bound-limited
// translates through a fixed scaled point.

#include <optional>
#include <variant>
#include <vector>

#include "laurent.hpp"
#include "qplaces.hpp"
#include "rational.hpp"
#include "sunits.hpp"

namespace sunitgcd {

// Where a candidate relation came from.
struct FromSupportPair {  // collision of two support points of a function
  Exponent a;
  Exponent b;
};
struct FromDirectionBound {};  // every coprime direction within the bound
struct FromScaledPoint {  // bounded directions translated through a point
  Rational theta;
  Rational eta;
};
using Provenance =
    std::variant<FromSupportPair, FromDirectionBound, FromScaledPoint>;

const char* provenance_name(const Provenance& p);

struct Candidate {
  MultiplicativeRelation rel;
  Provenance provenance;
};

// Deduplicated, canonically signed, sorted by relation; the first
// provenance to produce a relation wins.
class CandidateSet {
 public:
  const std::vector<Candidate>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  void insert(const MultiplicativeRelation& rel, Provenance provenance);
  bool contains(const MultiplicativeRelation& rel) const;

  // First (in sorted order) candidate relation that (u, v) satisfies
  // exactly.
  std::optional<MultiplicativeRelation> first_match(const Rational& u,
                                                    const Rational& v) const;

 private:
  std::vector<Candidate> items_;
};

// Primitive collision directions of a support: for each unordered pair of
// distinct points, the canonical primitive (p, q) with
// q*(i - i') = p*(j - j'); w = 1.  Fewer than two points give the empty set.
CandidateSet support_candidates(const MonomialSet& t);

// All canonical coprime directions (p, q) with max(|p|, |q|) <= floor(1/eps);
// w = 1.  eps must be positive.
CandidateSet bounded_candidates(const Rational& epsilon);

// The bounded directions translated through (theta, eta) != (0, 0)
// componentwise: relation u^p v^q = theta^p eta^q.
CandidateSet translated_candidates(const Rational& theta, const Rational& eta,
                                   const Rational& epsilon);

// Refinement along a primitive direction (p, q): the rational wbar values
// that make a two-term collision coefficient of the collapse of f vanish
// (a * wbar^j + a' * wbar^j' = 0 solved exactly).  Collisions with three or
// more contributors, or two contributors sharing the same second exponent,
// are not refined here.
std::vector<Rational> cancellation_constants(const LaurentPoly2& f, long p,
                                             long q,
                                             const FactorConfig& cfg = {});

enum class PointClassKind { OnCandidate, DependentSporadic, Independent };

const char* point_class_name(PointClassKind kind);

struct PointClass {
  PointClassKind kind = PointClassKind::Independent;
  std::optional<MultiplicativeRelation> relation;  // set unless Independent
};

// First matching candidate; else the minimal dependence relation of the
// pair; else Independent.
PointClass classify_point(const Rational& u, const Rational& v,
                          const CandidateSet& candidates,
                          const FactorConfig& cfg = {});

}  // namespace sunitgcd
