#include "scan.hpp"

#include <cmath>
#include <future>
#include <set>
#include <thread>
#include <utility>

#include "json.hpp"
#include "errors.hpp"
#include "heights.hpp"
#include "laurent.hpp"
#include "logcmp.hpp"

namespace sunitgcd {

using nlohmann::json;

const char* scan_inequality_name(ScanInequality s) {
  switch (s) {
    case ScanInequality::HeightGap: return "height-gap";
    case ScanInequality::MonomialMax: return "monomial-max";
    case ScanInequality::CoordinateMax: return "coordinate-max";
    case ScanInequality::UnitShift: return "unit-shift";
    case ScanInequality::SplitPair: return "split-pair";
  }
  throw InternalError("unknown scan inequality selector");
}

ScanInequality parse_scan_inequality(const std::string& name) {
  for (ScanInequality s :
       {ScanInequality::HeightGap, ScanInequality::MonomialMax,
        ScanInequality::CoordinateMax, ScanInequality::UnitShift,
        ScanInequality::SplitPair})
    if (name == scan_inequality_name(s)) return s;
  throw ConfigError("inequality: unknown selector \"" + name +
                    "\" (expected height-gap, monomial-max, coordinate-max, "
                    "unit-shift, or split-pair)");
}

namespace {

// ---------------------------------------------------------------------------
// JSON config loading
// ---------------------------------------------------------------------------

json parse_config_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw ConfigError("unknown config key: " + item.key());
}

long get_long(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw ConfigError(std::string(key) + ": expected an integer");
  return v.get<long>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string())
    throw ConfigError(std::string(key) + ": expected a string");
  return v.get<std::string>();
}

std::vector<Integer> get_primes(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array())
    throw ConfigError(std::string(key) + ": expected an array of primes");
  std::vector<Integer> out;
  for (const json& item : v) {
    if (!item.is_number_integer() || item.get<long long>() < 2)
      throw ConfigError(std::string(key) + ": entries must be integers >= 2");
    out.push_back(Integer(static_cast<long>(item.get<long long>())));
  }
  return out;
}

Rational get_rational(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rational(Integer(static_cast<long>(v.get<long long>())));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  }
  throw ConfigError(std::string(key) +
                    ": expected an integer or a rational string \"a/b\"");
}

SignMode get_signs(const json& j, const char* key) {
  const std::string s = get_string(j, key);
  if (s == "positive") return SignMode::Positive;
  if (s == "both") return SignMode::Both;
  throw ConfigError(std::string(key) +
                    ": expected \"positive\" or \"both\", got \"" + s + "\"");
}

ParsedFunction get_function(const json& j, const char* key) {
  const std::string text = get_string(j, key);
  try {
    return parse_function(text);
  } catch (const ParseError& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

// A univariate polynomial given as an expression in the named variable only.
QPoly get_upoly(const json& j, const char* key, char variable) {
  ParsedFunction f = get_function(j, key);
  if (f.is_quotient())
    throw ConfigError(std::string(key) + ": expected a polynomial, not a quotient");
  const LaurentPoly2& poly = std::get<LaurentPoly2>(f.value);
  if (poly.has_negative_exponents())
    throw ConfigError(std::string(key) + ": negative exponents not allowed");
  for (const auto& [e, c] : poly.terms()) {
    const bool uses_x = e.first != 0, uses_y = e.second != 0;
    if ((variable == 'X' && uses_y) || (variable == 'Y' && uses_x))
      throw ConfigError(std::string(key) + ": must only involve " +
                        std::string(1, variable));
  }
  if (poly.zero())
    throw ConfigError(std::string(key) + ": must be nonzero");
  return variable == 'X' ? to_qpoly_x(poly) : to_qpoly_y(poly);
}

// ---------------------------------------------------------------------------
// Per-point evaluation
// ---------------------------------------------------------------------------

struct ScanContext {
  const ScanConfig* cfg = nullptr;
  PlaceSet s;
  CandidateSet candidates;
  std::optional<RationalFunction2> f;  // resolved function scans
  QPoly r, sp;                         // resolved split-pair inputs
  std::vector<SUnit> units;
};

struct PartialOutcome {
  std::vector<ScanSolution> solutions;
  long evaluated = 0;
  long poles = 0;
  long zeros = 0;
};

void process_pair(const ScanContext& ctx, const SUnit& uu, const SUnit& vv,
                  PartialOutcome& out) {
  const ScanConfig& cfg = *ctx.cfg;
  const Rational u = uu.value();
  const Rational v = vv.value();
  InequalityReport primary;
  std::optional<InequalityReport> secondary;
  switch (cfg.inequality) {
    case ScanInequality::HeightGap: {
      if (ctx.f->den().eval(u, v) == 0) {
        ++out.poles;
        return;
      }
      if (ctx.f->num().eval(u, v) == 0) {
        ++out.zeros;
        return;
      }
      InequalityReport a =
          check_height_gap(ctx.f->num(), ctx.f->den(), u, v, cfg.epsilon);
      InequalityReport b = check_height_gap_gcdform(ctx.f->num(), ctx.f->den(),
                                                    u, v, cfg.epsilon);
      SGC_CHECK_MSG(a.relation == b.relation && a.satisfied == b.satisfied,
                    "the two height-gap formulations disagree");
      primary = std::move(a);
      break;
    }
    case ScanInequality::MonomialMax:
    case ScanInequality::CoordinateMax: {
      Rational value;
      try {
        value = ctx.f->eval(u, v);
      } catch (const PoleError&) {
        ++out.poles;
        return;
      }
      if (value == 0) {
        ++out.zeros;
        return;
      }
      MonomialMaxReports reports = check_monomial_max(*ctx.f, u, v, cfg.epsilon);
      primary = cfg.inequality == ScanInequality::MonomialMax
                    ? std::move(reports.vs_monomials)
                    : std::move(reports.vs_coordinates);
      break;
    }
    case ScanInequality::UnitShift: {
      if (u == 1 || v == 1) {
        ++out.zeros;
        return;
      }
      UnitShiftReports reports = check_unit_shift(u, v, cfg.epsilon, ctx.s);
      primary = std::move(reports.all_places);
      secondary = std::move(reports.outside_s);
      break;
    }
    case ScanInequality::SplitPair: {
      if (eval_upoly(ctx.r, u, Rational(0)) == 0 ||
          eval_upoly(ctx.sp, v, Rational(0)) == 0) {
        ++out.zeros;
        return;
      }
      primary = check_split_pair(ctx.r, ctx.sp, u, v, cfg.epsilon, ctx.s,
                                 cfg.split_places);
      break;
    }
  }
  ++out.evaluated;
  if (!primary.satisfied) return;
  ScanSolution sol;
  sol.u = u;
  sol.v = v;
  sol.primary = std::move(primary);
  sol.secondary = std::move(secondary);
  sol.cls = classify_point(u, v, ctx.candidates);
  out.solutions.push_back(std::move(sol));
}

PartialOutcome process_range(const ScanContext& ctx, std::size_t lo,
                             std::size_t hi, unsigned precision_bits) {
  set_interval_start_bits(precision_bits);
  PartialOutcome out;
  for (std::size_t i = lo; i < hi; ++i)
    for (const SUnit& vv : ctx.units) process_pair(ctx, ctx.units[i], vv, out);
  return out;
}

CandidateSet candidates_for(const ScanConfig& cfg,
                            const std::optional<RationalFunction2>& f,
                            const QPoly& r, const QPoly& sp) {
  switch (cfg.inequality) {
    case ScanInequality::HeightGap:
    case ScanInequality::MonomialMax:
    case ScanInequality::CoordinateMax:
      return support_candidates(f->monomials());
    case ScanInequality::UnitShift:
      return bounded_candidates(cfg.epsilon);
    case ScanInequality::SplitPair: {
      CandidateSet merged;
      for (const Rational& theta : rational_roots(r)) {
        if (theta == 0) continue;
        for (const Rational& eta : rational_roots(sp)) {
          if (eta == 0) continue;
          for (const Candidate& c :
               translated_candidates(theta, eta, cfg.epsilon).items())
            merged.insert(c.rel, c.provenance);
        }
      }
      return merged;
    }
  }
  throw InternalError("unknown scan inequality selector");
}

}  // namespace

ScanConfig load_scan_config(const std::string& json_text) {
  const json j = parse_config_document(json_text);
  reject_unknown_keys(
      j, {"s_primes", "exponent_bound", "epsilon", "inequality", "function",
          "r", "s", "split_places", "signs", "output", "precision_bits",
          "rng_seed", "workers"});
  for (const char* key : {"s_primes", "exponent_bound", "epsilon", "inequality"})
    if (!j.contains(key))
      throw ConfigError(std::string(key) + ": required key is missing");

  ScanConfig cfg;
  cfg.s_primes = get_primes(j, "s_primes");
  cfg.exponent_bound = get_long(j, "exponent_bound");
  cfg.epsilon = get_rational(j, "epsilon");
  cfg.inequality = parse_scan_inequality(get_string(j, "inequality"));
  if (j.contains("function")) cfg.function = get_function(j, "function");
  if (j.contains("r")) cfg.split_r = get_upoly(j, "r", 'X');
  if (j.contains("s")) cfg.split_s = get_upoly(j, "s", 'Y');
  if (j.contains("split_places")) {
    const std::string sp = get_string(j, "split_places");
    if (sp == "outside-s")
      cfg.split_places = SplitPlaces::OutsideS;
    else if (sp == "all")
      cfg.split_places = SplitPlaces::All;
    else
      throw ConfigError("split_places: expected \"outside-s\" or \"all\"");
  }
  if (j.contains("signs")) cfg.signs = get_signs(j, "signs");
  if (j.contains("output")) cfg.output = get_string(j, "output");
  if (j.contains("precision_bits")) {
    const long bits = get_long(j, "precision_bits");
    if (bits < 64 || bits > 4096)
      throw ConfigError("precision_bits: expected a value in [64, 4096]");
    cfg.precision_bits = static_cast<unsigned>(bits);
  }
  if (j.contains("rng_seed")) {
    const json& v = j.at("rng_seed");
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw ConfigError("rng_seed: expected a nonnegative integer");
    if (v.is_number_integer() && v.get<long long>() < 0)
      throw ConfigError("rng_seed: expected a nonnegative integer");
    cfg.rng_seed = v.get<std::uint64_t>();
  }
  if (j.contains("workers")) {
    const long w = get_long(j, "workers");
    if (w < 0) throw ConfigError("workers: expected a nonnegative integer");
    cfg.workers = static_cast<unsigned>(w);
  }
  validate_scan_config(cfg);
  return cfg;
}

void validate_scan_config(const ScanConfig& cfg) {
  try {
    PlaceSet unused(cfg.s_primes);
    (void)unused;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("s_primes: ") + e.what());
  }
  if (cfg.exponent_bound < 0)
    throw ConfigError("exponent_bound: must be >= 0");
  if (cfg.epsilon <= 0) throw ConfigError("epsilon: must be positive");
  if (cfg.precision_bits < 64 || cfg.precision_bits > 4096)
    throw ConfigError("precision_bits: expected a value in [64, 4096]");

  const bool wants_function =
      cfg.inequality == ScanInequality::HeightGap ||
      cfg.inequality == ScanInequality::MonomialMax ||
      cfg.inequality == ScanInequality::CoordinateMax;
  if (wants_function) {
    if (!cfg.function)
      throw ConfigError(std::string("function: required for ") +
                        scan_inequality_name(cfg.inequality) + " scans");
    if (cfg.split_r || cfg.split_s)
      throw ConfigError("r, s: only valid for split-pair scans");
    const RationalFunction2 f = cfg.function->as_function();
    if (cfg.inequality != ScanInequality::HeightGap &&
        !f.monomials().contains_one)
      throw ConfigError(
          "function: the support must contain the constant monomial 1");
    if (cfg.inequality == ScanInequality::CoordinateMax &&
        (f.deg_x() == 0 || f.deg_y() == 0))
      throw ConfigError(
          "function: coordinate-max needs positive degree in both X and Y");
  } else if (cfg.inequality == ScanInequality::SplitPair) {
    if (!cfg.split_r || !cfg.split_s)
      throw ConfigError("r, s: both required for split-pair scans");
    if (cfg.function)
      throw ConfigError("function: not valid for split-pair scans");
    if (cfg.split_places == SplitPlaces::All && cfg.split_r->at(0) == 0 &&
        cfg.split_s->at(0) == 0)
      throw ConfigError(
          "r, s: must not both vanish at 0 for the all-places form");
  } else {  // UnitShift
    if (cfg.function) throw ConfigError("function: not valid for unit-shift scans");
    if (cfg.split_r || cfg.split_s)
      throw ConfigError("r, s: only valid for split-pair scans");
  }
}

ScanOutcome run_scan(const ScanConfig& cfg) {
  validate_scan_config(cfg);
  ScanContext ctx;
  ctx.cfg = &cfg;
  ctx.s = cfg.place_set();
  if (cfg.function) ctx.f = cfg.function->as_function();
  if (cfg.split_r) ctx.r = *cfg.split_r;
  if (cfg.split_s) ctx.sp = *cfg.split_s;
  ctx.candidates = candidates_for(cfg, ctx.f, ctx.r, ctx.sp);
  ctx.units = enumerate_sunits(ctx.s, cfg.exponent_bound, cfg.signs);

  ScanOutcome outcome;
  outcome.candidates = ctx.candidates;
  const std::size_t m = ctx.units.size();
  outcome.points_total = static_cast<long>(m * m);

  unsigned workers = cfg.workers;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  std::vector<PartialOutcome> parts;
  if (workers <= 1 || m < 2 * workers) {
    parts.push_back(process_range(ctx, 0, m, cfg.precision_bits));
  } else {
    // Contiguous ranges of the outer index, folded back in order, so the
    // output is identical to a sequential run for any worker count.
    const std::size_t batches = std::min<std::size_t>(4 * workers, m);
    std::vector<std::future<PartialOutcome>> futures;
    for (std::size_t b = 0; b < batches; ++b) {
      const std::size_t lo = m * b / batches;
      const std::size_t hi = m * (b + 1) / batches;
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        return process_range(ctx, lo, hi, cfg.precision_bits);
      }));
    }
    for (auto& fut : futures) parts.push_back(fut.get());
  }
  for (PartialOutcome& part : parts) {
    outcome.points_evaluated += part.evaluated;
    outcome.skipped_poles += part.poles;
    outcome.skipped_zeros += part.zeros;
    for (ScanSolution& sol : part.solutions)
      outcome.solutions.push_back(std::move(sol));
  }
  return outcome;
}

RatioScanTotals ratio_scan(const PlaceSet& s, long bound, SignMode signs,
                           const std::function<void(const RatioRow&)>& emit) {
  const std::vector<SUnit> units = enumerate_sunits(s, bound, signs);
  std::vector<Rational> values;
  values.reserve(units.size());
  for (const SUnit& x : units) values.push_back(x.value());
  RatioScanTotals totals;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = 0; j < units.size(); ++j) {
      ++totals.pairs_total;
      if (values[i] == 1 || values[j] == 1) {
        ++totals.skipped_unit;
        continue;
      }
      ShiftRatioReport rep = check_shift_ratio(units[i], units[j]);
      SGC_CHECK_MSG(rep.h_ratio.mult.get_den() == 1 &&
                        rep.h_point.mult.get_den() == 1,
                    "heights of rationals must be integers");
      if (rep.h_point.mult == 1) {
        ++totals.skipped_degenerate;
        continue;
      }
      RatioRow row;
      row.u = values[i];
      row.v = values[j];
      row.h_ratio = rep.h_ratio.mult.get_num();
      row.h_point = rep.h_point.mult.get_num();
      row.ratio = rep.ratio();
      row.dependent = rep.dependent;
      row.relation = rep.relation;
      emit(row);
      ++totals.rows;
    }
  }
  return totals;
}

RatioConfig load_ratio_config(const std::string& json_text) {
  const json j = parse_config_document(json_text);
  reject_unknown_keys(j, {"s_primes", "exponent_bound", "signs", "output"});
  for (const char* key : {"s_primes", "exponent_bound"})
    if (!j.contains(key))
      throw ConfigError(std::string(key) + ": required key is missing");
  RatioConfig cfg;
  cfg.s_primes = get_primes(j, "s_primes");
  cfg.exponent_bound = get_long(j, "exponent_bound");
  if (cfg.exponent_bound < 0) throw ConfigError("exponent_bound: must be >= 0");
  if (j.contains("signs")) cfg.signs = get_signs(j, "signs");
  if (j.contains("output")) cfg.output = get_string(j, "output");
  try {
    PlaceSet unused(cfg.s_primes);
    (void)unused;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("s_primes: ") + e.what());
  }
  return cfg;
}

std::optional<MultiplicativeRelation> gcd_growth(
    const Integer& a, const Integer& b, long n_max,
    const std::function<void(const GcdGrowthRow&)>& emit) {
  if (a < 2 || b < 2) throw DomainError("gcd growth requires a, b >= 2");
  if (n_max < 1) throw DomainError("gcd growth requires n_max >= 1");
  Integer pa = 1, pb = 1;
  for (long n = 1; n <= n_max; ++n) {
    pa *= a;
    pb *= b;
    GcdGrowthRow row;
    row.n = n;
    mpz_gcd(row.gcd_value.get_mpz_t(), Integer(pa - 1).get_mpz_t(),
            Integer(pb - 1).get_mpz_t());
    row.log_gcd_over_n =
        std::log(nearest_double(Rational(row.gcd_value))) / static_cast<double>(n);
    emit(row);
  }
  return rational_dependence(Rational(a), Rational(b));
}

}  // namespace sunitgcd
