#pragma once

// Artifact writers: RFC-4180 CSV tables (CRLF line ends, mandatory header
// row) and the JSON documents emitted by the command-line tools.  Exact
// quantities are always written as integer or "a/b" strings; doubles appear
// only in float-named fields and are printed with 17 significant digits.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "proofscope.hpp"
#include "scan.hpp"

namespace sunitgcd {

// %.17g, the shortest form that round-trips a double through text.
std::string format_double(double x);

// RFC 4180: cells holding a comma, quote, CR or LF are quoted with internal
// quotes doubled; records end in CRLF.  path "-" streams to stdout.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<std::string>& cells);

 private:
  std::FILE* file_ = nullptr;
  bool owned_ = false;
};

// The exact multiplicative backing of a log-linear form, as a product of
// "(base)^(exponent)" factors with rational base and exponent ("1" for the
// empty form).
std::string log_expr_mult(const LogExpr& e);

// {"mult": exact backing string, "log": reporting double}.
nlohmann::ordered_json log_expr_json(const LogExpr& e);

nlohmann::ordered_json relation_json(const MultiplicativeRelation& rel);
nlohmann::ordered_json candidate_json(const Candidate& c);
nlohmann::ordered_json candidate_list_json(const CandidateSet& set);

// gcd-growth table: columns n, gcd, log_gcd_over_n.  Returns the dependence
// relation of (a, b) when one exists so callers can warn.
std::optional<MultiplicativeRelation> write_gcd_growth_csv(
    const Integer& a, const Integer& b, long n_max, const std::string& path);

// Ratio table: columns u, v, h_ratio_num, h_1uv, ratio, dependent,
// relation_p, relation_q, in deterministic enumeration order.
RatioScanTotals write_ratio_csv(const PlaceSet& s, long bound, SignMode signs,
                                const std::string& path);

nlohmann::ordered_json ratio_footer_json(const RatioScanTotals& totals);

// The full scan report: {params, candidates, solutions, skipped}.
nlohmann::ordered_json scan_report_json(const ScanConfig& cfg,
                                        const ScanOutcome& outcome);

// The candidate-generator report for the candidates command.
nlohmann::ordered_json candidates_report_json(
    const std::string& mode, const CandidateSet& set,
    const nlohmann::ordered_json& inputs);

// The inequality-chain ledger plus the point-height bound.
nlohmann::ordered_json proof_trace_json(const ChainLedger& ledger,
                                        const AuxHeightBound& bound,
                                        const PlaceSet& s);

}  // namespace sunitgcd
