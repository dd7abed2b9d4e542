// CSV and JSON artifact writers: RFC-4180 framing, exact value strings,
// reporting doubles, and the document layouts consumed by the CLI tools.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "expr.hpp"
#include "report.hpp"
#include "subtori.hpp"
#include "sunits.hpp"

using namespace sunitgcd;
using nlohmann::ordered_json;

namespace {

// A file under the system temp directory, removed on scope exit.
class TempPath {
 public:
  explicit TempPath(const std::string& name)
      : path_(std::filesystem::temp_directory_path() /
              ("sunitgcd_test_" + name)) {}
  ~TempPath() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> split_crlf(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find("\r\n", pos);
    REQUIRE(end != std::string::npos);  // every record must end in CRLF
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 2;
  }
  return lines;
}

std::vector<std::string> keys_of(const ordered_json& j) {
  std::vector<std::string> out;
  for (const auto& item : j.items()) out.push_back(item.key());
  return out;
}

}  // namespace

TEST_CASE("reporting doubles round-trip through 17 significant digits") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  const double x = std::log(3.0);
  CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}

TEST_CASE("csv cells are quoted per RFC 4180 and records end in CRLF") {
  TempPath path("quoting.csv");
  {
    CsvWriter w(path.str());
    w.row({"h1", "h2"});
    w.row({"b,c", "d\"e"});
    w.row({"f\r\ng", "plain"});
  }
  CHECK(read_bytes(path.str()) ==
        "h1,h2\r\n"
        "\"b,c\",\"d\"\"e\"\r\n"
        "\"f\r\ng\",plain\r\n");
}

TEST_CASE("csv writer reports an unopenable path") {
  CHECK_THROWS_WITH_AS(
      CsvWriter("/nonexistent-dir-sunitgcd/out.csv"),
      doctest::Contains("cannot open output file"), DomainError);
}

TEST_CASE("log expressions serialize their exact multiplicative backing") {
  LogExpr empty;
  CHECK(log_expr_mult(empty) == "1");
  ordered_json j0 = log_expr_json(empty);
  CHECK(keys_of(j0) == std::vector<std::string>{"mult", "log"});
  CHECK(j0["mult"] == "1");
  CHECK(j0["log"].get<double>() == 0.0);

  LogExpr e;
  e.add_term(1, 2);
  CHECK(log_expr_mult(e) == "(2)");  // exponent 1 is implicit
  e.add_term(Rational(-1, 2), 9);
  CHECK(log_expr_mult(e) == "(2) * (9)^(-1/2)");
  ordered_json j = log_expr_json(e);
  CHECK(j["mult"] == "(2) * (9)^(-1/2)");
  CHECK(j["log"].get<double>() ==
        doctest::Approx(std::log(2.0) - std::log(3.0)));
}

TEST_CASE("relations and candidates serialize with exact torsion strings") {
  MultiplicativeRelation rel;
  rel.p = 3;
  rel.q = -2;
  rel.w = Rational(1, 5);
  ordered_json j = relation_json(rel);
  CHECK(keys_of(j) == std::vector<std::string>{"p", "q", "w"});
  CHECK(j["p"] == 3);
  CHECK(j["q"] == -2);
  CHECK(j["w"] == "1/5");

  Candidate c;
  c.rel = rel;
  c.provenance = FromDirectionBound{};
  ordered_json cj = candidate_json(c);
  CHECK(keys_of(cj) ==
        std::vector<std::string>{"p", "q", "w", "provenance"});
  CHECK(cj["provenance"] == "bounded");
}

TEST_CASE("candidate lists keep canonical sorted order") {
  const CandidateSet set = bounded_candidates(1);
  ordered_json list = candidate_list_json(set);
  REQUIRE(list.size() == 4);
  CHECK(list[0] == ordered_json{{"p", 0},
                                {"q", 1},
                                {"w", "1"},
                                {"provenance", "bounded"}});
  CHECK(list[1]["p"] == 1);
  CHECK(list[1]["q"] == -1);
}

TEST_CASE("gcd growth table streams exact gcds with reporting ratios") {
  TempPath path("gcd_growth.csv");
  auto rel = write_gcd_growth_csv(2, 3, 5, path.str());
  CHECK_FALSE(rel.has_value());
  const std::string expected =
      "n,gcd,log_gcd_over_n\r\n"
      "1,1,0\r\n"
      "2,1,0\r\n"
      "3,1,0\r\n"
      "4,5," + format_double(std::log(5.0) / 4.0) + "\r\n"
      "5,1,0\r\n";
  CHECK(read_bytes(path.str()) == expected);
}

TEST_CASE("gcd growth reports multiplicatively dependent bases") {
  TempPath path("gcd_growth_dep.csv");
  auto rel = write_gcd_growth_csv(2, 4, 3, path.str());
  REQUIRE(rel.has_value());
  CHECK(rel->p == 2);
  CHECK(rel->q == -1);
  CHECK(rel->w == 1);
}

TEST_CASE("gcd growth rejects bases below 2") {
  TempPath path("gcd_growth_bad.csv");
  CHECK_THROWS_WITH_AS(write_gcd_growth_csv(1, 3, 5, path.str()),
                       doctest::Contains("a, b >= 2"), DomainError);
}

TEST_CASE("ratio table skips unit and degenerate pairs and reports totals") {
  TempPath path("ratio_small.csv");
  const RatioScanTotals t =
      write_ratio_csv(PlaceSet({2}), 1, SignMode::Both, path.str());
  CHECK(t.pairs_total == 36);
  CHECK(t.rows == 24);
  CHECK(t.skipped_unit == 11);       // u = 1 or v = 1
  CHECK(t.skipped_degenerate == 1);  // (-1, -1) has H(1:u:v) = 1

  const std::vector<std::string> lines = split_crlf(read_bytes(path.str()));
  REQUIRE(lines.size() == 25);  // header + 24 data rows
  CHECK(lines[0] ==
        "u,v,h_ratio_num,h_1uv,ratio,dependent,relation_p,relation_q");
  // First enumerated pair: u = v = 1/2, so (u-1)/(v-1) = 1 and the pair is
  // dependent through u/v = 1.
  CHECK(lines[1] == "1/2,1/2,1,2,0,true,1,-1");

  ordered_json footer = ratio_footer_json(t);
  CHECK(keys_of(footer) ==
        std::vector<std::string>{"pairs_total", "rows", "skipped_unit",
                                 "skipped_degenerate"});
  CHECK(footer["pairs_total"] == 36);
  CHECK(footer["rows"] == 24);
  CHECK(footer["skipped_unit"] == 11);
  CHECK(footer["skipped_degenerate"] == 1);
}

TEST_CASE("independent ratio rows leave the relation columns empty") {
  TempPath path("ratio_indep.csv");
  const RatioScanTotals t =
      write_ratio_csv(PlaceSet({2, 3}), 1, SignMode::Positive, path.str());
  CHECK(t.pairs_total == 81);
  CHECK(t.skipped_unit == 17);
  CHECK(t.skipped_degenerate == 0);
  CHECK(t.rows == 64);

  // u = 1/2, v = 1/3: H((u-1)/(v-1)) = H(3/4) = 4, H(1:1/2:1/3) = 6, and
  // the pair is multiplicatively independent.
  const std::string want =
      "1/2,1/3,4,6," + format_double(std::log(4.0) / std::log(6.0)) +
      ",false,,";
  bool found = false;
  for (const std::string& line : split_crlf(read_bytes(path.str())))
    if (line.rfind("1/2,1/3,", 0) == 0) {
      CHECK(line == want);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("scan reports carry params, candidates, solutions and skips") {
  ScanConfig cfg;
  cfg.s_primes = {2};
  cfg.exponent_bound = 1;
  cfg.epsilon = Rational(3, 5);
  cfg.inequality = ScanInequality::UnitShift;
  cfg.output = "-";
  const ScanOutcome out = run_scan(cfg);
  const ordered_json j = scan_report_json(cfg, out);

  CHECK(keys_of(j) == std::vector<std::string>{"params", "candidates",
                                               "solutions", "skipped"});
  const ordered_json& p = j["params"];
  CHECK(keys_of(p) ==
        std::vector<std::string>{"s_primes", "exponent_bound", "epsilon",
                                 "inequality", "signs", "precision_bits",
                                 "rng_seed", "points_total",
                                 "points_evaluated"});
  CHECK(p["s_primes"] == ordered_json::array({2}));
  CHECK(p["exponent_bound"] == 1);
  CHECK(p["epsilon"] == "3/5");
  CHECK(p["inequality"] == "unit-shift");
  CHECK(p["signs"] == "both");
  CHECK(p["points_total"] == 36);
  CHECK(p["points_evaluated"] == 25);  // 11 pairs touch u = 1 or v = 1

  CHECK(j["skipped"] == ordered_json{{"poles", 0},
                                     {"zeros", 11},
                                     {"undecided", 0}});

  REQUIRE(j["solutions"].is_array());
  REQUIRE(!j["solutions"].empty());
  for (const ordered_json& sol : j["solutions"]) {
    CHECK(sol.contains("u"));
    CHECK(sol.contains("v"));
    CHECK(sol.contains("lhs"));
    CHECK(sol.contains("rhs"));
    CHECK(sol.contains("outside_s"));  // unit-shift attaches the second form
    const std::string cls = sol["class"].get<std::string>();
    const bool known = cls == "on-candidate" || cls == "dependent-sporadic" ||
                       cls == "independent";
    CHECK(known);
    if (cls == "on-candidate") CHECK(sol.contains("relation"));
  }
}

TEST_CASE("function scans record the parsed function and pole skips") {
  ScanConfig cfg;
  cfg.s_primes = {2};
  cfg.exponent_bound = 1;
  cfg.epsilon = Rational(1, 2);
  cfg.inequality = ScanInequality::HeightGap;
  cfg.function = parse_function("(X-1)/(Y-1)");
  cfg.output = "-";
  const ScanOutcome out = run_scan(cfg);
  const ordered_json j = scan_report_json(cfg, out);

  const ordered_json& p = j["params"];
  CHECK(keys_of(p) ==
        std::vector<std::string>{"s_primes", "exponent_bound", "epsilon",
                                 "inequality", "function", "signs",
                                 "precision_bits", "rng_seed", "points_total",
                                 "points_evaluated"});
  CHECK(p["function"] == "(X - 1)/(Y - 1)");
  CHECK(j["skipped"]["poles"] == 6);   // v = 1 kills the denominator
  CHECK(j["skipped"]["zeros"] == 5);   // u = 1 kills the numerator, v != 1
  CHECK(p["points_evaluated"] == 25);

  // Support collisions of (X - 1, Y - 1): exponent points (0,0), (1,0), (0,1).
  const ordered_json& cands = j["candidates"];
  REQUIRE(cands.size() == 3);
  CHECK(cands[0] == ordered_json{{"p", 0},
                                 {"q", 1},
                                 {"w", "1"},
                                 {"provenance", "support"}});
  CHECK(cands[1]["p"] == 1);
  CHECK(cands[1]["q"] == -1);
  CHECK(cands[2]["p"] == 1);
  CHECK(cands[2]["q"] == 0);
}

TEST_CASE("candidate reports merge the mode, inputs and candidate list") {
  const CandidateSet set = bounded_candidates(1);
  ordered_json inputs;
  inputs["epsilon"] = "1";
  const ordered_json j = candidates_report_json("bounded", set, inputs);
  CHECK(keys_of(j) ==
        std::vector<std::string>{"mode", "epsilon", "candidates"});
  CHECK(j["mode"] == "bounded");
  CHECK(j["epsilon"] == "1");
  CHECK(j["candidates"].size() == 4);
}

TEST_CASE("proof traces serialize the full ledger") {
  const PlaceSet s({2, 3});
  const ProofParams params = choose_params(1);
  const SUnit u = SUnit::from_rational(16, s);
  const SUnit v = SUnit::from_rational(81, s);
  const ChainLedger ledger = verify_chain(u, v, params, s);
  const AuxHeightBound bound = aux_height_bound(ledger.u, ledger.v, params);
  const ordered_json j = proof_trace_json(ledger, bound, s);

  CHECK(keys_of(j) ==
        std::vector<std::string>{
            "params", "s_primes", "u", "v", "swapped", "hypothesis_met",
            "hypothesis_note", "point_built", "tail_forms_unit",
            "double_product", "rows", "all_checked_hold", "height_bound"});
  CHECK(keys_of(j["params"]) ==
        std::vector<std::string>{"epsilon", "k", "h", "n", "epsilon0",
                                 "delta"});
  CHECK(j["params"]["epsilon"] == "1");
  CHECK(j["params"]["k"] == 5);
  CHECK(j["params"]["h"] == 52);
  CHECK(j["params"]["n"] == 317);
  CHECK(j["params"]["epsilon0"] == "28");
  CHECK(j["params"]["delta"] == "7/15");
  CHECK(j["s_primes"] == ordered_json::array({2, 3}));
  CHECK(j["u"] == "16");
  CHECK(j["v"] == "81");
  CHECK(j["swapped"] == false);
  CHECK(j["hypothesis_met"] == false);
  CHECK(j["point_built"] == true);

  CHECK(keys_of(j["double_product"]) ==
        std::vector<std::string>{"vanishes", "special_part", "tail_part",
                                 "p_s", "log"});
  CHECK(j["double_product"]["vanishes"] == false);
  CHECK(j["double_product"]["log"].is_number());

  REQUIRE(j["rows"].size() == 3);
  CHECK(keys_of(j["rows"][0]) ==
        std::vector<std::string>{"name", "requires_hypothesis", "checked",
                                 "holds", "lhs", "rhs"});
  CHECK(j["rows"][0]["name"] == "unconditional-bound");
  CHECK(j["rows"][0]["checked"] == true);
  CHECK(j["rows"][1]["name"] == "hypothesis-bound");
  CHECK(j["rows"][1]["checked"] == false);  // hypothesis unmet at epsilon 1
  CHECK(j["rows"][2]["name"] == "final-bound");

  CHECK(keys_of(j["height_bound"]) ==
        std::vector<std::string>{"h_point", "bound_mid", "bound_final",
                                 "preconditions_met", "holds"});
  CHECK(j["height_bound"]["preconditions_met"] == true);
}

TEST_CASE("a vanishing double product serializes with null logs") {
  const PlaceSet s({5});
  const ProofParams params = choose_params(4);
  const SUnit u = SUnit::from_rational(-1, s);
  const SUnit v = SUnit::from_rational(-1, s);
  const ChainLedger ledger = verify_chain(u, v, params, s);
  REQUIRE(ledger.product.vanishes);
  const AuxHeightBound bound = aux_height_bound(ledger.u, ledger.v, params);

  const ordered_json j = proof_trace_json(ledger, bound, s);  // must not throw
  CHECK(j["double_product"]["vanishes"] == true);
  CHECK(j["double_product"]["special_part"] == "0");
  CHECK(j["double_product"]["log"].is_null());
  REQUIRE(j["rows"].size() == 3);
  for (const ordered_json& row : j["rows"]) {
    CHECK(row["lhs"]["mult"] == "0");
    CHECK(row["lhs"]["log"].is_null());
    CHECK(row["checked"] == true);
    CHECK(row["holds"] == true);
  }
}
