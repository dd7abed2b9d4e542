// Command-line front end.  All computation lives behind the C API of the
// shared library; this file only maps flags/config files to JSON documents,
// routes artifacts to files or stdout, and translates statuses to exit
// codes (0 ok, 2 config/parse error, 3 undecided comparisons present,
// 4 internal invariant violation).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sunitgcd/sunitgcd.h"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitInternal = 4;

int fail_status(sug_status status) {
  std::cerr << "error: " << sug_last_error() << "\n";
  return static_cast<int>(status);
}

int fail_config(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitConfig;
}

bool read_file(const std::string& path, std::string& out, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot read config file: " + path;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int write_text(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return fail_config("cannot open output file: " + path);
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  std::fclose(f);
  if (!ok) return fail_config("short write to output file: " + path);
  return 0;
}

// Loads --config (when given) and layers the provided flags over it.
struct ConfigBuilder {
  json doc = json::object();

  bool load(const std::string& path, std::string& error) {
    if (path.empty()) return true;
    std::string text;
    if (!read_file(path, text, error)) return false;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      error = std::string("config is not valid JSON: ") + e.what();
      return false;
    }
    if (!doc.is_object()) {
      error = "config must be a JSON object";
      return false;
    }
    return true;
  }

  void set_if(const CLI::Option* opt, const char* key, const json& value) {
    if (opt && opt->count() > 0) doc[key] = value;
  }
};

// Shared by ratio-scan and exceptional-scan.
struct ScanFlags {
  std::string config_path;
  std::vector<long long> primes;
  long bound = 0;
  std::string epsilon;
  std::string inequality;
  std::string function;
  std::string split_r;
  std::string split_s;
  std::string split_places;
  std::string signs;
  long precision_bits = 0;
  unsigned long long rng_seed = 0;
  long workers = 0;
  std::string output = "-";

  CLI::Option* primes_opt = nullptr;
  CLI::Option* bound_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;
  CLI::Option* inequality_opt = nullptr;
  CLI::Option* function_opt = nullptr;
  CLI::Option* split_r_opt = nullptr;
  CLI::Option* split_s_opt = nullptr;
  CLI::Option* split_places_opt = nullptr;
  CLI::Option* signs_opt = nullptr;
  CLI::Option* precision_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
};

void add_common_scan_flags(CLI::App* cmd, ScanFlags& f, bool full) {
  cmd->add_option("--config", f.config_path,
                  "JSON config file; flags override its keys");
  f.primes_opt =
      cmd->add_option("--primes", f.primes, "finite primes of S (e.g. 2 3)");
  f.bound_opt =
      cmd->add_option("--bound", f.bound, "exponent bound of the S-unit box");
  f.signs_opt = cmd->add_option("--signs", f.signs, "positive | both");
  cmd->add_option("-o,--output", f.output, "output path; - for stdout");
  if (!full) return;
  f.epsilon_opt =
      cmd->add_option("--epsilon", f.epsilon, "slope, rational like 3/5");
  f.inequality_opt = cmd->add_option(
      "--inequality", f.inequality,
      "height-gap | monomial-max | coordinate-max | unit-shift | split-pair");
  f.function_opt =
      cmd->add_option("--function", f.function, "expression in X, Y");
  f.split_r_opt =
      cmd->add_option("--r", f.split_r, "split-pair polynomial in X");
  f.split_s_opt =
      cmd->add_option("--s", f.split_s, "split-pair polynomial in Y");
  f.split_places_opt = cmd->add_option("--split-places", f.split_places,
                                       "outside-s | all");
  f.precision_opt = cmd->add_option("--precision-bits", f.precision_bits,
                                    "starting interval precision [64, 4096]");
  f.seed_opt = cmd->add_option("--rng-seed", f.rng_seed,
                               "recorded in the report for reproducibility");
  f.workers_opt =
      cmd->add_option("--workers", f.workers, "worker count; 0 = auto");
}

bool build_scan_config(const ScanFlags& f, bool full, std::string& json_text,
                       std::string& error) {
  ConfigBuilder b;
  if (!b.load(f.config_path, error)) return false;
  b.set_if(f.primes_opt, "s_primes", f.primes);
  b.set_if(f.bound_opt, "exponent_bound", f.bound);
  b.set_if(f.signs_opt, "signs", f.signs);
  if (full) {
    b.set_if(f.epsilon_opt, "epsilon", f.epsilon);
    b.set_if(f.inequality_opt, "inequality", f.inequality);
    b.set_if(f.function_opt, "function", f.function);
    b.set_if(f.split_r_opt, "r", f.split_r);
    b.set_if(f.split_s_opt, "s", f.split_s);
    b.set_if(f.split_places_opt, "split_places", f.split_places);
    b.set_if(f.precision_opt, "precision_bits", f.precision_bits);
    b.set_if(f.seed_opt, "rng_seed", f.rng_seed);
    b.set_if(f.workers_opt, "workers", f.workers);
  }
  json_text = b.doc.dump();
  return true;
}

int run_gcd_growth(const std::string& a, const std::string& b, long n_max,
                   const std::string& output) {
  int warn = 0;
  const sug_status status =
      sug_gcd_growth_csv(a.c_str(), b.c_str(), n_max, output.c_str(), &warn);
  if (status != SUG_OK) return fail_status(status);
  if (warn)
    std::cerr << "warning: multiplicatively dependent pair (a, b)\n";
  return 0;
}

int run_ratio_scan(const ScanFlags& f) {
  std::string config, error;
  if (!build_scan_config(f, /*full=*/false, config, error))
    return fail_config(error);
  char* footer = nullptr;
  const sug_status status =
      sug_ratio_scan(config.c_str(), f.output.c_str(), &footer);
  if (status != SUG_OK) return fail_status(status);
  if (footer) {
    std::cerr << footer;
    sug_string_free(footer);
  }
  return 0;
}

int run_exceptional_scan(const ScanFlags& f) {
  std::string config, error;
  if (!build_scan_config(f, /*full=*/true, config, error))
    return fail_config(error);
  char* report = nullptr;
  long undecided = 0;
  const sug_status status =
      sug_exceptional_scan(config.c_str(), &report, &undecided);
  if (status != SUG_OK) return fail_status(status);
  const int rc = write_text(f.output, report);
  sug_string_free(report);
  if (rc != 0) return rc;
  if (undecided > 0) {
    std::cerr << "warning: " << undecided << " undecided comparisons\n";
    return static_cast<int>(SUG_ERR_UNDECIDED);
  }
  return 0;
}

int run_candidates(const std::string& mode, const CLI::Option* function_opt,
                   const std::string& function,
                   const CLI::Option* epsilon_opt, const std::string& epsilon,
                   const CLI::Option* theta_opt, const std::string& theta,
                   const CLI::Option* eta_opt, const std::string& eta,
                   const std::string& output) {
  json request{{"mode", mode}};
  if (function_opt->count()) request["function"] = function;
  if (epsilon_opt->count()) request["epsilon"] = epsilon;
  if (theta_opt->count()) request["theta"] = theta;
  if (eta_opt->count()) request["eta"] = eta;
  char* report = nullptr;
  const sug_status status =
      sug_candidates_json(request.dump().c_str(), &report);
  if (status != SUG_OK) return fail_status(status);
  const int rc = write_text(output, report);
  sug_string_free(report);
  return rc;
}

int run_proof_trace(const std::string& u, const std::string& v,
                    const std::string& epsilon,
                    const std::vector<long long>& primes,
                    const std::string& output) {
  json request{{"u", u}, {"v", v}, {"epsilon", epsilon}, {"s_primes", primes}};
  char* report = nullptr;
  const sug_status status =
      sug_proof_trace_json(request.dump().c_str(), &report);
  if (status != SUG_OK) return fail_status(status);
  const int rc = write_text(output, report);
  sug_string_free(report);
  return rc;
}

int run_selfcheck(const std::string& output) {
  char* report = nullptr;
  int all_passed = 0;
  const sug_status status = sug_selfcheck_json(&report, &all_passed);
  if (status != SUG_OK) return fail_status(status);
  const int rc = write_text(output, report);
  sug_string_free(report);
  if (rc != 0) return rc;
  if (!all_passed) {
    std::cerr << "error: selfcheck failed\n";
    return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-unit heights, gcd analogues, and subtorus scans"};
  app.set_version_flag("--version", std::string(sug_version()));
  app.require_subcommand(1);

  // gcd-growth
  auto* gcd_cmd =
      app.add_subcommand("gcd-growth", "gcd(a^n - 1, b^n - 1) table as CSV");
  std::string gcd_a, gcd_b;
  long gcd_n_max = 0;
  std::string gcd_output = "-";
  gcd_cmd->add_option("-a", gcd_a, "first base, integer >= 2")->required();
  gcd_cmd->add_option("-b", gcd_b, "second base, integer >= 2")->required();
  gcd_cmd->add_option("-n,--n-max", gcd_n_max, "largest exponent")->required();
  gcd_cmd->add_option("-o,--output", gcd_output, "output path; - for stdout");

  // ratio-scan
  auto* ratio_cmd = app.add_subcommand(
      "ratio-scan", "h((u-1)/(v-1)) / h(1:u:v) table as CSV; totals on stderr");
  ScanFlags ratio_flags;
  add_common_scan_flags(ratio_cmd, ratio_flags, /*full=*/false);

  // exceptional-scan
  auto* scan_cmd = app.add_subcommand(
      "exceptional-scan", "inequality scan over S-unit pairs, JSON report");
  ScanFlags scan_flags;
  add_common_scan_flags(scan_cmd, scan_flags, /*full=*/true);

  // candidates
  auto* cand_cmd = app.add_subcommand(
      "candidates", "candidate subtorus relations for a support or bound");
  std::string cand_mode, cand_function, cand_epsilon, cand_theta, cand_eta;
  std::string cand_output = "-";
  cand_cmd->add_option("--mode", cand_mode, "support | bounded | translated")
      ->required();
  auto* cand_function_opt =
      cand_cmd->add_option("--function", cand_function, "expression in X, Y");
  auto* cand_epsilon_opt =
      cand_cmd->add_option("--epsilon", cand_epsilon, "rational like 1/2");
  auto* cand_theta_opt =
      cand_cmd->add_option("--theta", cand_theta, "first coordinate");
  auto* cand_eta_opt =
      cand_cmd->add_option("--eta", cand_eta, "second coordinate");
  cand_cmd->add_option("-o,--output", cand_output, "output path; - for stdout");

  // proof-trace
  auto* trace_cmd = app.add_subcommand(
      "proof-trace", "inequality-chain ledger for one S-unit pair");
  std::string trace_u, trace_v, trace_epsilon;
  std::vector<long long> trace_primes;
  std::string trace_output = "-";
  trace_cmd->add_option("--u", trace_u, "rational S-unit")->required();
  trace_cmd->add_option("--v", trace_v, "rational S-unit")->required();
  trace_cmd->add_option("--epsilon", trace_epsilon, "rational like 1/4")
      ->required();
  trace_cmd->add_option("--primes", trace_primes, "finite primes of S")
      ->required();
  trace_cmd->add_option("-o,--output", trace_output,
                        "output path; - for stdout");

  // selfcheck
  auto* self_cmd =
      app.add_subcommand("selfcheck", "run the exact-identity suites");
  std::string self_output = "-";
  self_cmd->add_option("-o,--output", self_output, "output path; - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitConfig;
  }

  if (gcd_cmd->parsed())
    return run_gcd_growth(gcd_a, gcd_b, gcd_n_max, gcd_output);
  if (ratio_cmd->parsed()) return run_ratio_scan(ratio_flags);
  if (scan_cmd->parsed()) return run_exceptional_scan(scan_flags);
  if (cand_cmd->parsed())
    return run_candidates(cand_mode, cand_function_opt, cand_function,
                          cand_epsilon_opt, cand_epsilon, cand_theta_opt,
                          cand_theta, cand_eta_opt, cand_eta, cand_output);
  if (trace_cmd->parsed())
    return run_proof_trace(trace_u, trace_v, trace_epsilon, trace_primes,
                           trace_output);
  if (self_cmd->parsed()) return run_selfcheck(self_output);
  return kExitConfig;
}
