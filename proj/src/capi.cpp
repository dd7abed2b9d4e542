#include "sunitgcd/sunitgcd.h"

#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "errors.hpp"
#include "expr.hpp"
#include "gcdcore.hpp"
#include "heights.hpp"
#include "json.hpp"
#include "proofscope.hpp"
#include "qplaces.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "scan.hpp"
#include "selfcheck.hpp"
#include "subtori.hpp"
#include "sunits.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

struct sug_function {
  sunitgcd::ParsedFunction value;
};

namespace {

thread_local std::string g_last_error;
thread_local size_t g_last_offset = 0;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sug_status guarded(F&& body) {
  g_last_error.clear();
  g_last_offset = 0;
  try {
    return body();
  } catch (const sunitgcd::ParseError& e) {
    g_last_error = e.what();
    g_last_offset = e.offset();
    return SUG_ERR_CONFIG;
  } catch (const sunitgcd::InternalError& e) {
    g_last_error = e.what();
    return SUG_ERR_INTERNAL;
  } catch (const sunitgcd::ConfigError& e) {
    g_last_error = e.what();
    return SUG_ERR_CONFIG;
  } catch (const sunitgcd::DomainError& e) {
    g_last_error = e.what();
    return SUG_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUG_ERR_INTERNAL;
  }
}

sug_status require(bool ok, const char* message) {
  if (ok) return SUG_OK;
  g_last_error = message;
  return SUG_ERR_CONFIG;
}

std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

sunitgcd::Rational parse_rational_arg(const char* text, const char* name) {
  if (!text)
    throw sunitgcd::ConfigError(std::string(name) + ": missing value");
  try {
    return sunitgcd::parse_rational(text);
  } catch (const sunitgcd::DomainError& e) {
    throw sunitgcd::ConfigError(std::string(name) + ": " + e.what());
  }
}

sunitgcd::Integer parse_integer_arg(const char* text, const char* name) {
  const sunitgcd::Rational r = parse_rational_arg(text, name);
  if (r.get_den() != 1)
    throw sunitgcd::ConfigError(std::string(name) + ": expected an integer");
  return r.get_num();
}

// Strict request-object helpers (mirror the scan-config conventions).
json parse_request(const char* text) {
  if (!text) throw sunitgcd::ConfigError("request: missing JSON document");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw sunitgcd::ConfigError(std::string("request is not valid JSON: ") +
                                e.what());
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object())
    throw sunitgcd::ConfigError("request must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw sunitgcd::ConfigError("unknown request key: " + item.key());
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key))
    throw sunitgcd::ConfigError(std::string(key) + ": required key is missing");
  const json& v = j.at(key);
  if (!v.is_string())
    throw sunitgcd::ConfigError(std::string(key) + ": expected a string");
  return v.get<std::string>();
}

sunitgcd::Rational get_rational(const json& j, const char* key) {
  if (!j.contains(key))
    throw sunitgcd::ConfigError(std::string(key) + ": required key is missing");
  const json& v = j.at(key);
  if (v.is_number_integer())
    return sunitgcd::Rational(sunitgcd::Integer(static_cast<long>(v.get<long long>())));
  if (v.is_string()) {
    try {
      return sunitgcd::parse_rational(v.get<std::string>());
    } catch (const sunitgcd::DomainError& e) {
      throw sunitgcd::ConfigError(std::string(key) + ": " + e.what());
    }
  }
  throw sunitgcd::ConfigError(
      std::string(key) + ": expected an integer or a rational string \"a/b\"");
}

std::vector<sunitgcd::Integer> get_primes(const json& j, const char* key) {
  if (!j.contains(key))
    throw sunitgcd::ConfigError(std::string(key) + ": required key is missing");
  const json& v = j.at(key);
  if (!v.is_array())
    throw sunitgcd::ConfigError(std::string(key) +
                                ": expected an array of primes");
  std::vector<sunitgcd::Integer> out;
  for (const json& item : v) {
    if (!item.is_number_integer() || item.get<long long>() < 2)
      throw sunitgcd::ConfigError(std::string(key) +
                                  ": entries must be integers >= 2");
    out.push_back(sunitgcd::Integer(static_cast<long>(item.get<long long>())));
  }
  return out;
}

}  // namespace

extern "C" {

const char* sug_version(void) { return "0.1.0"; }

const char* sug_last_error(void) { return g_last_error.c_str(); }

size_t sug_last_error_offset(void) { return g_last_offset; }

void sug_string_free(char* s) { std::free(s); }

sug_status sug_function_parse(const char* text, sug_function** out) {
  if (sug_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new sug_function{sunitgcd::parse_function(text)};
    return SUG_OK;
  });
}

void sug_function_free(sug_function* f) { delete f; }

sug_status sug_function_print(const sug_function* f, char** out) {
  if (sug_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(sunitgcd::print_function(f->value));
    return *out ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_function_monomials_json(const sug_function* f, char** out) {
  if (sug_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    const sunitgcd::MonomialSet t = f->value.as_function().monomials();
    ordered_json points = ordered_json::array();
    for (const auto& [i, j] : t.points)
      points.push_back(ordered_json::array({i, j}));
    const ordered_json doc{{"points", points},
                           {"d1", t.d1},
                           {"d2", t.d2},
                           {"contains_one", t.contains_one}};
    *out = dup_string(json_dump(doc));
    return *out ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_height(const char* rational, char** out) {
  if (sug_status s = require(rational && out, "null argument")) return s;
  return guarded([&] {
    const sunitgcd::Rational x = parse_rational_arg(rational, "value");
    *out = dup_string(sunitgcd::format_rational(
        sunitgcd::height_rational(x).mult));
    return *out ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_height_projective(const char* const* coords, size_t n,
                                 char** out) {
  if (sug_status s = require(coords && out && n > 0, "null argument"))
    return s;
  return guarded([&] {
    std::vector<sunitgcd::Rational> xs;
    for (size_t i = 0; i < n; ++i)
      xs.push_back(parse_rational_arg(coords[i], "coordinate"));
    *out = dup_string(
        sunitgcd::format_rational(sunitgcd::height_projective(xs).mult));
    return *out ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_valuation(const char* rational, const char* prime, long* out) {
  if (sug_status s = require(rational && prime && out, "null argument"))
    return s;
  return guarded([&] {
    const sunitgcd::Rational x = parse_rational_arg(rational, "value");
    const sunitgcd::Integer p = parse_integer_arg(prime, "prime");
    *out = sunitgcd::valuation(x, p);
    return SUG_OK;
  });
}

sug_status sug_factor_json(const char* integer, char** out) {
  if (sug_status s = require(integer && out, "null argument")) return s;
  return guarded([&] {
    const sunitgcd::Integer n = parse_integer_arg(integer, "value");
    ordered_json factors = ordered_json::array();
    for (const auto& [p, e] : sunitgcd::factor(n))
      factors.push_back(ordered_json::array({p.get_str(), e}));
    *out = dup_string(json_dump(factors));
    return *out ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_product_formula_check(const char* rational, int* holds) {
  if (sug_status s = require(rational && holds, "null argument")) return s;
  return guarded([&] {
    const sunitgcd::Rational x = parse_rational_arg(rational, "value");
    *holds = sunitgcd::product_formula_check(x).holds ? 1 : 0;
    return SUG_OK;
  });
}

sug_status sug_gcd_growth_csv(const char* a, const char* b, long n_max,
                              const char* csv_path, int* warn_dependent) {
  if (sug_status s = require(a && b && csv_path, "null argument")) return s;
  return guarded([&] {
    const sunitgcd::Integer ia = parse_integer_arg(a, "a");
    const sunitgcd::Integer ib = parse_integer_arg(b, "b");
    const auto relation =
        sunitgcd::write_gcd_growth_csv(ia, ib, n_max, csv_path);
    if (warn_dependent) *warn_dependent = relation.has_value() ? 1 : 0;
    return SUG_OK;
  });
}

sug_status sug_ratio_scan(const char* config_json, const char* csv_path,
                          char** footer_json) {
  if (sug_status s = require(config_json != nullptr, "null argument"))
    return s;
  return guarded([&] {
    const sunitgcd::RatioConfig cfg =
        sunitgcd::load_ratio_config(config_json);
    std::string path = csv_path ? csv_path : cfg.output;
    if (path.empty())
      throw sunitgcd::ConfigError("output: no CSV destination given");
    const sunitgcd::RatioScanTotals totals = sunitgcd::write_ratio_csv(
        cfg.place_set(), cfg.exponent_bound, cfg.signs, path);
    if (footer_json) {
      *footer_json = dup_string(json_dump(sunitgcd::ratio_footer_json(totals)));
      if (!*footer_json) return SUG_ERR_INTERNAL;
    }
    return SUG_OK;
  });
}

sug_status sug_exceptional_scan(const char* config_json, char** report_json,
                                long* undecided) {
  if (sug_status s = require(config_json && report_json, "null argument"))
    return s;
  return guarded([&] {
    const sunitgcd::ScanConfig cfg = sunitgcd::load_scan_config(config_json);
    const sunitgcd::ScanOutcome outcome = sunitgcd::run_scan(cfg);
    if (undecided) *undecided = outcome.undecided;
    *report_json =
        dup_string(json_dump(sunitgcd::scan_report_json(cfg, outcome)));
    return *report_json ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_candidates_json(const char* request_json, char** report_json) {
  if (sug_status s = require(request_json && report_json, "null argument"))
    return s;
  return guarded([&] {
    const json request = parse_request(request_json);
    reject_unknown_keys(request,
                        {"mode", "function", "epsilon", "theta", "eta"});
    const std::string mode = get_string(request, "mode");
    sunitgcd::CandidateSet set;
    ordered_json inputs;
    if (mode == "support") {
      const std::string text = get_string(request, "function");
      sunitgcd::ParsedFunction f;
      try {
        f = sunitgcd::parse_function(text);
      } catch (const sunitgcd::ParseError& e) {
        throw sunitgcd::ConfigError(std::string("function: ") + e.what());
      }
      set = sunitgcd::support_candidates(f.as_function().monomials());
      inputs["function"] = sunitgcd::print_function(f);
    } else if (mode == "bounded") {
      const sunitgcd::Rational eps = get_rational(request, "epsilon");
      if (eps <= 0)
        throw sunitgcd::ConfigError("epsilon: must be positive");
      set = sunitgcd::bounded_candidates(eps);
      inputs["epsilon"] = sunitgcd::format_rational(eps);
    } else if (mode == "translated") {
      const sunitgcd::Rational eps = get_rational(request, "epsilon");
      if (eps <= 0)
        throw sunitgcd::ConfigError("epsilon: must be positive");
      const sunitgcd::Rational theta = get_rational(request, "theta");
      const sunitgcd::Rational eta = get_rational(request, "eta");
      set = sunitgcd::translated_candidates(theta, eta, eps);
      inputs["epsilon"] = sunitgcd::format_rational(eps);
      inputs["theta"] = sunitgcd::format_rational(theta);
      inputs["eta"] = sunitgcd::format_rational(eta);
    } else {
      throw sunitgcd::ConfigError(
          "mode: expected \"support\", \"bounded\", or \"translated\"");
    }
    *report_json = dup_string(
        json_dump(sunitgcd::candidates_report_json(mode, set, inputs)));
    return *report_json ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_proof_trace_json(const char* request_json, char** report_json) {
  if (sug_status s = require(request_json && report_json, "null argument"))
    return s;
  return guarded([&] {
    const json request = parse_request(request_json);
    reject_unknown_keys(request, {"u", "v", "epsilon", "s_primes"});
    const sunitgcd::Rational u = get_rational(request, "u");
    const sunitgcd::Rational v = get_rational(request, "v");
    const sunitgcd::Rational eps = get_rational(request, "epsilon");
    if (eps <= 0) throw sunitgcd::ConfigError("epsilon: must be positive");
    if (u == 1) throw sunitgcd::ConfigError("u: must not equal 1");
    if (v == 1) throw sunitgcd::ConfigError("v: must not equal 1");
    sunitgcd::PlaceSet s;
    try {
      s = sunitgcd::PlaceSet(get_primes(request, "s_primes"));
    } catch (const sunitgcd::DomainError& e) {
      throw sunitgcd::ConfigError(std::string("s_primes: ") + e.what());
    }
    sunitgcd::SUnit su, sv;
    try {
      su = sunitgcd::SUnit::from_rational(u, s);
      sv = sunitgcd::SUnit::from_rational(v, s);
    } catch (const sunitgcd::DomainError& e) {
      throw sunitgcd::ConfigError(std::string("u, v: ") + e.what());
    }
    const sunitgcd::ProofParams params = sunitgcd::choose_params(eps);
    const sunitgcd::ChainLedger ledger =
        sunitgcd::verify_chain(su, sv, params, s);
    const sunitgcd::AuxHeightBound bound =
        sunitgcd::aux_height_bound(ledger.u, ledger.v, params);
    *report_json =
        dup_string(json_dump(sunitgcd::proof_trace_json(ledger, bound, s)));
    return *report_json ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

sug_status sug_selfcheck_json(char** report_json, int* all_passed) {
  if (sug_status s = require(report_json != nullptr, "null argument"))
    return s;
  return guarded([&] {
    const sunitgcd::SelfCheckReport report = sunitgcd::run_selfcheck();
    if (all_passed) *all_passed = report.all_passed ? 1 : 0;
    *report_json = dup_string(json_dump(sunitgcd::selfcheck_json(report)));
    return *report_json ? SUG_OK : SUG_ERR_INTERNAL;
  });
}

}  // extern "C"
