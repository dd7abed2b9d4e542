#include "report.hpp"

#include <cinttypes>
#include <cstring>

#include "errors.hpp"

namespace sunitgcd {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path) {
  if (path == "-") {
    file_ = stdout;
    owned_ = false;
    return;
  }
  file_ = std::fopen(path.c_str(), "wb");
  if (!file_) throw DomainError("cannot open output file: " + path);
  owned_ = true;
}

CsvWriter::~CsvWriter() {
  if (file_ && owned_) std::fclose(file_);
  if (file_ && !owned_) std::fflush(file_);
}

namespace {

bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\r\n") != std::string::npos;
}

void append_cell(std::string& line, const std::string& cell) {
  if (!needs_quoting(cell)) {
    line += cell;
    return;
  }
  line += '"';
  for (char c : cell) {
    if (c == '"') line += '"';
    line += c;
  }
  line += '"';
}

}  // namespace

void CsvWriter::row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    append_cell(line, cells[i]);
  }
  line += "\r\n";
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size())
    throw DomainError("short write to CSV output");
}

std::string log_expr_mult(const LogExpr& e) {
  if (e.empty()) return "1";
  std::string out;
  for (const auto& [coeff, base] : e.terms()) {
    if (!out.empty()) out += " * ";
    out += "(" + format_rational(base) + ")";
    if (coeff != 1) out += "^(" + format_rational(coeff) + ")";
  }
  return out;
}

ordered_json log_expr_json(const LogExpr& e) {
  return ordered_json{{"mult", log_expr_mult(e)}, {"log", e.approx()}};
}

ordered_json relation_json(const MultiplicativeRelation& rel) {
  return ordered_json{
      {"p", rel.p}, {"q", rel.q}, {"w", format_rational(rel.w)}};
}

ordered_json candidate_json(const Candidate& c) {
  ordered_json j = relation_json(c.rel);
  j["provenance"] = provenance_name(c.provenance);
  return j;
}

ordered_json candidate_list_json(const CandidateSet& set) {
  ordered_json out = ordered_json::array();
  for (const Candidate& c : set.items()) out.push_back(candidate_json(c));
  return out;
}

std::optional<MultiplicativeRelation> write_gcd_growth_csv(
    const Integer& a, const Integer& b, long n_max, const std::string& path) {
  CsvWriter csv(path);
  csv.row({"n", "gcd", "log_gcd_over_n"});
  return gcd_growth(a, b, n_max, [&](const GcdGrowthRow& row) {
    csv.row({std::to_string(row.n), row.gcd_value.get_str(),
             format_double(row.log_gcd_over_n)});
  });
}

RatioScanTotals write_ratio_csv(const PlaceSet& s, long bound, SignMode signs,
                                const std::string& path) {
  CsvWriter csv(path);
  csv.row({"u", "v", "h_ratio_num", "h_1uv", "ratio", "dependent",
           "relation_p", "relation_q"});
  return ratio_scan(s, bound, signs, [&](const RatioRow& row) {
    std::string rel_p, rel_q;
    if (row.relation) {
      rel_p = std::to_string(row.relation->p);
      rel_q = std::to_string(row.relation->q);
    }
    csv.row({format_rational(row.u), format_rational(row.v),
             row.h_ratio.get_str(), row.h_point.get_str(),
             format_double(row.ratio), row.dependent ? "true" : "false",
             rel_p, rel_q});
  });
}

ordered_json ratio_footer_json(const RatioScanTotals& totals) {
  return ordered_json{{"pairs_total", totals.pairs_total},
                      {"rows", totals.rows},
                      {"skipped_unit", totals.skipped_unit},
                      {"skipped_degenerate", totals.skipped_degenerate}};
}

namespace {

ordered_json scan_params_json(const ScanConfig& cfg,
                              const ScanOutcome& outcome) {
  ordered_json params;
  ordered_json primes = ordered_json::array();
  for (const Integer& p : cfg.s_primes) primes.push_back(p.get_si());
  params["s_primes"] = primes;
  params["exponent_bound"] = cfg.exponent_bound;
  params["epsilon"] = format_rational(cfg.epsilon);
  params["inequality"] = scan_inequality_name(cfg.inequality);
  if (cfg.function) params["function"] = print_function(*cfg.function);
  if (cfg.split_r)
    params["r"] = print_polynomial(
        [&] {
          LaurentPoly2 p;
          for (std::size_t i = 0; i < cfg.split_r->c.size(); ++i)
            if (cfg.split_r->c[i] != 0)
              p.set_coeff(static_cast<long>(i), 0, cfg.split_r->c[i]);
          return p;
        }());
  if (cfg.split_s)
    params["s"] = print_polynomial(
        [&] {
          LaurentPoly2 p;
          for (std::size_t i = 0; i < cfg.split_s->c.size(); ++i)
            if (cfg.split_s->c[i] != 0)
              p.set_coeff(0, static_cast<long>(i), cfg.split_s->c[i]);
          return p;
        }());
  if (cfg.inequality == ScanInequality::SplitPair)
    params["split_places"] =
        cfg.split_places == SplitPlaces::All ? "all" : "outside-s";
  params["signs"] = cfg.signs == SignMode::Both ? "both" : "positive";
  params["precision_bits"] = cfg.precision_bits;
  params["rng_seed"] = cfg.rng_seed;
  params["points_total"] = outcome.points_total;
  params["points_evaluated"] = outcome.points_evaluated;
  return params;
}

ordered_json solution_json(const ScanSolution& sol, bool unit_shift) {
  ordered_json j;
  j["u"] = format_rational(sol.u);
  j["v"] = format_rational(sol.v);
  j["lhs"] = log_expr_json(sol.primary.lhs);
  j["rhs"] = log_expr_json(sol.primary.rhs);
  j["class"] = point_class_name(sol.cls.kind);
  if (sol.cls.relation) j["relation"] = relation_json(*sol.cls.relation);
  if (unit_shift && sol.secondary)
    j["outside_s"] = sol.secondary->satisfied;
  return j;
}

}  // namespace

ordered_json scan_report_json(const ScanConfig& cfg,
                              const ScanOutcome& outcome) {
  ordered_json report;
  report["params"] = scan_params_json(cfg, outcome);
  report["candidates"] = candidate_list_json(outcome.candidates);
  ordered_json solutions = ordered_json::array();
  const bool unit_shift = cfg.inequality == ScanInequality::UnitShift;
  for (const ScanSolution& sol : outcome.solutions)
    solutions.push_back(solution_json(sol, unit_shift));
  report["solutions"] = solutions;
  report["skipped"] = ordered_json{{"poles", outcome.skipped_poles},
                                   {"zeros", outcome.skipped_zeros},
                                   {"undecided", outcome.undecided}};
  return report;
}

ordered_json candidates_report_json(const std::string& mode,
                                    const CandidateSet& set,
                                    const ordered_json& inputs) {
  ordered_json report;
  report["mode"] = mode;
  for (const auto& item : inputs.items()) report[item.key()] = item.value();
  report["candidates"] = candidate_list_json(set);
  return report;
}

namespace {

ordered_json proof_params_json(const ProofParams& p) {
  return ordered_json{{"epsilon", format_rational(p.epsilon)},
                      {"k", p.k},
                      {"h", p.h},
                      {"n", p.n},
                      {"epsilon0", format_rational(p.epsilon0)},
                      {"delta", format_rational(p.delta)}};
}

ordered_json chain_row_json(const ChainRow& row) {
  ordered_json j;
  j["name"] = row.name;
  j["requires_hypothesis"] = row.requires_hypothesis;
  j["checked"] = row.checked;
  j["holds"] = row.holds;
  j["lhs"] = log_expr_json(row.lhs);
  j["rhs"] = log_expr_json(row.rhs);
  return j;
}

}  // namespace

ordered_json proof_trace_json(const ChainLedger& ledger,
                              const AuxHeightBound& bound, const PlaceSet& s) {
  ordered_json report;
  report["params"] = proof_params_json(ledger.params);
  ordered_json primes = ordered_json::array();
  for (const Integer& p : s.primes()) primes.push_back(p.get_si());
  report["s_primes"] = primes;
  report["u"] = format_rational(ledger.u);
  report["v"] = format_rational(ledger.v);
  report["swapped"] = ledger.swapped;
  report["hypothesis_met"] = ledger.hypothesis_met;
  report["hypothesis_note"] = ledger.hypothesis_note;
  report["point_built"] = ledger.point_built;
  report["tail_forms_unit"] = ledger.tail_forms_unit;
  // A vanishing double product has no finite logarithm; report its
  // multiplicative value 0 with a null log instead of a number.
  ordered_json product_log;
  if (!ledger.product.vanishes) product_log = ledger.product.log_value();
  report["double_product"] =
      ordered_json{{"vanishes", ledger.product.vanishes},
                   {"special_part", format_rational(ledger.product.special_part)},
                   {"tail_part", format_rational(ledger.product.tail_part)},
                   {"p_s", format_rational(ledger.product.p_s)},
                   {"log", product_log}};
  ordered_json rows = ordered_json::array();
  for (const ChainRow& row : ledger.rows) {
    ordered_json rj = chain_row_json(row);
    if (ledger.product.vanishes)
      rj["lhs"] = ordered_json{{"mult", "0"}, {"log", nullptr}};
    rows.push_back(rj);
  }
  report["rows"] = rows;
  report["all_checked_hold"] = ledger.all_checked_hold;
  report["height_bound"] =
      ordered_json{{"h_point", format_rational(bound.h_point)},
                   {"bound_mid", format_rational(bound.bound_mid)},
                   {"bound_final", format_rational(bound.bound_final)},
                   {"preconditions_met", bound.preconditions_met},
                   {"holds", bound.holds}};
  return report;
}

}  // namespace sunitgcd
