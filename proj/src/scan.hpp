#pragma once

// Deterministic exhaustive scans over pairs of S-units: the configurable
// inequality scan behind the exceptional-set experiments, the streaming
// (u-1)/(v-1) height-ratio table, and the gcd(a^n - 1, b^n - 1) growth
// table.  Scan output order never depends on the worker count; parallel
// batches are folded back in enumeration order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "gcdcore.hpp"
#include "qplaces.hpp"
#include "rational.hpp"
#include "subtori.hpp"
#include "sunits.hpp"
#include "upoly.hpp"

namespace sunitgcd {

// Which inequality the scan evaluates at every pair (u, v).
enum class ScanInequality {
  HeightGap,     // "height-gap":   h(p/q) vs h(p:q:1) - eps*max
  MonomialMax,   // "monomial-max": h(f) vs (1-eps)*max_T h(T)
  CoordinateMax, // "coordinate-max": h(f) vs (1-eps)*max{h(u)/2degY, ...}
  UnitShift,     // "unit-shift":   (u-1, v-1) over all places, with the
                 //                 outside-S form attached as secondary
  SplitPair      // "split-pair":   (r(u), s(v)) over the configured places
};

const char* scan_inequality_name(ScanInequality s);
ScanInequality parse_scan_inequality(const std::string& name);  // ConfigError

struct ScanConfig {
  std::vector<Integer> s_primes;
  long exponent_bound = 0;
  Rational epsilon;
  ScanInequality inequality = ScanInequality::UnitShift;
  std::optional<ParsedFunction> function;  // height-gap / monomial scans
  std::optional<QPoly> split_r;            // split-pair: r in X, applied to u
  std::optional<QPoly> split_s;            // split-pair: s in Y, applied to v
  SplitPlaces split_places = SplitPlaces::OutsideS;
  SignMode signs = SignMode::Both;
  std::string output;            // artifact path; "-" means stdout
  unsigned precision_bits = 128; // starting interval precision per worker
  std::uint64_t rng_seed = 0;    // recorded for reproducibility; the scans
                                 // here are exhaustive and never sample
  unsigned workers = 0;          // 0 = one task per hardware thread

  PlaceSet place_set() const { return PlaceSet(s_primes); }
};

// Parses and validates a JSON config document.  ConfigError names the
// offending key.  Unknown keys are rejected.
ScanConfig load_scan_config(const std::string& json_text);

// Same validation rules on a programmatically built config.
void validate_scan_config(const ScanConfig& cfg);

struct ScanSolution {
  Rational u, v;
  InequalityReport primary;
  // Unit-shift scans: the outside-S half-slope form on the same pair.
  std::optional<InequalityReport> secondary;
  PointClass cls;
};

struct ScanOutcome {
  CandidateSet candidates;
  std::vector<ScanSolution> solutions;  // enumeration order
  long points_total = 0;
  long points_evaluated = 0;
  long skipped_poles = 0;
  long skipped_zeros = 0;
  long undecided = 0;  // structurally zero: every comparison is decided
};

ScanOutcome run_scan(const ScanConfig& cfg);

// One row of the (u-1)/(v-1) ratio table.
struct RatioRow {
  Rational u, v;
  Integer h_ratio;   // H((u-1)/(v-1)), exact
  Integer h_point;   // H(1:u:v), exact
  double ratio = 0;  // log h_ratio / log h_point, reporting double
  bool dependent = false;
  std::optional<MultiplicativeRelation> relation;
};

struct RatioScanTotals {
  long pairs_total = 0;
  long rows = 0;
  long skipped_unit = 0;        // u = 1 or v = 1: the shift vanishes
  long skipped_degenerate = 0;  // H(1:u:v) = 1: no ratio denominator
};

// Streams rows in deterministic enumeration order (single-threaded).
RatioScanTotals ratio_scan(const PlaceSet& s, long bound, SignMode signs,
                           const std::function<void(const RatioRow&)>& emit);

// Config for the ratio table: a subset of the scan config keys.
struct RatioConfig {
  std::vector<Integer> s_primes;
  long exponent_bound = 0;
  SignMode signs = SignMode::Both;
  std::string output;

  PlaceSet place_set() const { return PlaceSet(s_primes); }
};
RatioConfig load_ratio_config(const std::string& json_text);

struct GcdGrowthRow {
  long n = 0;
  Integer gcd_value;            // gcd(a^n - 1, b^n - 1), exact
  double log_gcd_over_n = 0;    // reporting double
};

// Streams rows n = 1..n_max; a, b >= 2.  Returns the multiplicative
// dependence relation of (a, b) when one exists so callers can warn.
std::optional<MultiplicativeRelation> gcd_growth(
    const Integer& a, const Integer& b, long n_max,
    const std::function<void(const GcdGrowthRow&)>& emit);

}  // namespace sunitgcd
