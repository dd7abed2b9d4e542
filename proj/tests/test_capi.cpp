// Exercises the public C interface end to end through the shared library:
// status codes, thread-local error strings, parse-error offsets, ownership
// of returned strings, and the JSON/CSV documents behind each entry point.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sunitgcd/sunitgcd.h"

using nlohmann::json;

namespace {

// Adopts a heap string returned by the library and releases it.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  sug_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

class TempPath {
 public:
  explicit TempPath(const std::string& name)
      : path_(std::filesystem::temp_directory_path() /
              ("sunitgcd_capi_" + name)) {}
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

}  // namespace

TEST_CASE("version and status codes match the documented contract") {
  CHECK(std::string(sug_version()) == "0.1.0");
  CHECK(SUG_OK == 0);
  CHECK(SUG_ERR_CONFIG == 2);
  CHECK(SUG_ERR_UNDECIDED == 3);
  CHECK(SUG_ERR_INTERNAL == 4);
}

TEST_CASE("null arguments are rejected without crashing") {
  sug_function* f = nullptr;
  CHECK(sug_function_parse(nullptr, &f) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()) == "null argument");
  char* out = nullptr;
  CHECK(sug_height("3/2", nullptr) == SUG_ERR_CONFIG);
  CHECK(sug_height(nullptr, &out) == SUG_ERR_CONFIG);
  CHECK(sug_height_projective(nullptr, 0, &out) == SUG_ERR_CONFIG);
  CHECK(sug_ratio_scan(nullptr, nullptr, nullptr) == SUG_ERR_CONFIG);
  CHECK(sug_selfcheck_json(nullptr, nullptr) == SUG_ERR_CONFIG);
  sug_string_free(nullptr);  // must be a no-op
}

TEST_CASE("functions parse, print canonically and round-trip") {
  sug_function* f = nullptr;
  REQUIRE(sug_function_parse("(X-1)/(Y-1)", &f) == SUG_OK);
  char* printed = nullptr;
  REQUIRE(sug_function_print(f, &printed) == SUG_OK);
  CHECK(take(printed) == "(X - 1)/(Y - 1)");
  sug_function_free(f);

  REQUIRE(sug_function_parse("3/2*X^2*Y^-1 - 5", &f) == SUG_OK);
  printed = nullptr;
  REQUIRE(sug_function_print(f, &printed) == SUG_OK);
  const std::string text = take(printed);
  sug_function_free(f);

  sug_function* again = nullptr;
  REQUIRE(sug_function_parse(text.c_str(), &again) == SUG_OK);
  printed = nullptr;
  REQUIRE(sug_function_print(again, &printed) == SUG_OK);
  CHECK(take(printed) == text);
  sug_function_free(again);
}

TEST_CASE("parse failures report the byte offset of the first bad token") {
  sug_function* f = nullptr;
  CHECK(sug_function_parse("1 + * X", &f) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("at byte 4") != std::string::npos);
  CHECK(sug_last_error_offset() == 4);

  CHECK(sug_function_parse("X^^2", &f) == SUG_ERR_CONFIG);
  CHECK(sug_last_error_offset() == 2);

  // A later successful call clears the sticky error state.
  REQUIRE(sug_function_parse("X", &f) == SUG_OK);
  CHECK(std::string(sug_last_error()).empty());
  CHECK(sug_last_error_offset() == 0);
  sug_function_free(f);
}

TEST_CASE("monomial documents list exponent points with degrees") {
  sug_function* f = nullptr;
  REQUIRE(sug_function_parse("X^2*Y + 1", &f) == SUG_OK);
  char* doc = nullptr;
  REQUIRE(sug_function_monomials_json(f, &doc) == SUG_OK);
  const json j = take_json(doc);
  sug_function_free(f);
  CHECK(j["points"] == json::array({{0, 0}, {2, 1}}));
  CHECK(j["d1"] == 2);
  CHECK(j["d2"] == 1);
  CHECK(j["contains_one"] == true);
}

TEST_CASE("heights cross the boundary as exact strings") {
  char* out = nullptr;
  REQUIRE(sug_height("3/2", &out) == SUG_OK);
  CHECK(take(out) == "3");
  REQUIRE(sug_height("-7", &out) == SUG_OK);
  CHECK(take(out) == "7");
  CHECK(sug_height("abc", &out) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("value") != std::string::npos);

  const char* coords[] = {"2", "4", "8"};
  REQUIRE(sug_height_projective(coords, 3, &out) == SUG_OK);
  CHECK(take(out) == "4");
  const char* coords2[] = {"1/2", "1/3"};
  REQUIRE(sug_height_projective(coords2, 2, &out) == SUG_OK);
  CHECK(take(out) == "3");
}

TEST_CASE("valuations and factorizations are exact") {
  long v = 99;
  REQUIRE(sug_valuation("3/8", "2", &v) == SUG_OK);
  CHECK(v == -3);
  REQUIRE(sug_valuation("12", "2", &v) == SUG_OK);
  CHECK(v == 2);
  CHECK(sug_valuation("0", "2", &v) == SUG_ERR_CONFIG);
  CHECK(sug_valuation("1/2", "6", &v) == SUG_ERR_CONFIG);

  char* doc = nullptr;
  REQUIRE(sug_factor_json("82944", &doc) == SUG_OK);
  CHECK(take_json(doc) == json::array({{"2", 10}, {"3", 4}}));
  REQUIRE(sug_factor_json("-60", &doc) == SUG_OK);
  CHECK(take_json(doc) == json::array({{"2", 2}, {"3", 1}, {"5", 1}}));
  REQUIRE(sug_factor_json("1", &doc) == SUG_OK);
  CHECK(take_json(doc) == json::array());
  CHECK(sug_factor_json("0", &doc) == SUG_ERR_CONFIG);
}

TEST_CASE("the product formula check holds for nonzero rationals") {
  int holds = -1;
  REQUIRE(sug_product_formula_check("6/35", &holds) == SUG_OK);
  CHECK(holds == 1);
  REQUIRE(sug_product_formula_check("-2048/3", &holds) == SUG_OK);
  CHECK(holds == 1);
  CHECK(sug_product_formula_check("0", &holds) == SUG_ERR_CONFIG);
}

TEST_CASE("gcd growth writes the table and warns on dependent bases") {
  TempPath path("growth.csv");
  int warn = -1;
  REQUIRE(sug_gcd_growth_csv("2", "3", 4, path.str().c_str(), &warn) ==
          SUG_OK);
  CHECK(warn == 0);
  const std::string bytes = read_bytes(path.str());
  CHECK(bytes.rfind("n,gcd,log_gcd_over_n\r\n", 0) == 0);
  CHECK(bytes.find("\r\n4,5,") != std::string::npos);

  warn = -1;
  REQUIRE(sug_gcd_growth_csv("2", "4", 3, path.str().c_str(), &warn) ==
          SUG_OK);
  CHECK(warn == 1);

  CHECK(sug_gcd_growth_csv("1", "3", 4, path.str().c_str(), &warn) ==
        SUG_ERR_CONFIG);
  CHECK(sug_gcd_growth_csv("5/2", "3", 4, path.str().c_str(), &warn) ==
        SUG_ERR_CONFIG);
}

TEST_CASE("the ratio scan returns run totals in the footer") {
  TempPath path("ratio.csv");
  const char* config =
      R"({"s_primes": [2], "exponent_bound": 1, "signs": "both"})";
  char* footer = nullptr;
  REQUIRE(sug_ratio_scan(config, path.str().c_str(), &footer) == SUG_OK);
  const json j = take_json(footer);
  CHECK(j["pairs_total"] == 36);
  CHECK(j["rows"] == 24);
  CHECK(j["skipped_unit"] == 11);
  CHECK(j["skipped_degenerate"] == 1);
  CHECK(read_bytes(path.str()).rfind(
            "u,v,h_ratio_num,h_1uv,ratio,dependent,relation_p,relation_q",
            0) == 0);

  CHECK(sug_ratio_scan(R"({"s_primes": [2], "exponent_bound": 1, "bogus": 1})",
                       path.str().c_str(), &footer) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("unknown config key: bogus") !=
        std::string::npos);
  CHECK(sug_ratio_scan(R"({"s_primes": [2]})", path.str().c_str(), &footer) ==
        SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error())
            .find("exponent_bound: required key is missing") !=
        std::string::npos);
}

TEST_CASE("the exceptional scan returns the full report document") {
  const char* config =
      R"({"s_primes": [2], "exponent_bound": 1, "epsilon": "3/5",
          "inequality": "unit-shift"})";
  char* report = nullptr;
  long undecided = -1;
  REQUIRE(sug_exceptional_scan(config, &report, &undecided) == SUG_OK);
  CHECK(undecided == 0);
  const json j = take_json(report);
  CHECK(j["params"]["points_total"] == 36);
  CHECK(j["params"]["points_evaluated"] == 25);
  CHECK(j["params"]["inequality"] == "unit-shift");
  CHECK(j["skipped"]["zeros"] == 11);
  CHECK(j["skipped"]["undecided"] == 0);
  CHECK(j["candidates"].is_array());
  CHECK(j["solutions"].is_array());

  CHECK(sug_exceptional_scan(
            R"({"s_primes": [2], "exponent_bound": 1,
                "inequality": "unit-shift"})",
            &report, &undecided) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error())
            .find("epsilon: required key is missing") != std::string::npos);
  CHECK(sug_exceptional_scan("not json", &report, &undecided) ==
        SUG_ERR_CONFIG);
}

TEST_CASE("candidate generation supports all three modes") {
  char* report = nullptr;
  REQUIRE(sug_candidates_json(
              R"({"mode": "support", "function": "(X-1)/(Y-1)"})", &report) ==
          SUG_OK);
  json j = take_json(report);
  CHECK(j["mode"] == "support");
  CHECK(j["function"] == "(X - 1)/(Y - 1)");
  CHECK(j["candidates"].size() == 3);

  REQUIRE(sug_candidates_json(R"({"mode": "bounded", "epsilon": "1"})",
                              &report) == SUG_OK);
  j = take_json(report);
  CHECK(j["epsilon"] == "1");
  REQUIRE(j["candidates"].size() == 4);
  CHECK(j["candidates"][0] ==
        json{{"p", 0}, {"q", 1}, {"w", "1"}, {"provenance", "bounded"}});

  REQUIRE(sug_candidates_json(
              R"({"mode": "translated", "epsilon": "1", "theta": "2",
                  "eta": "3"})",
              &report) == SUG_OK);
  j = take_json(report);
  CHECK(j["theta"] == "2");
  CHECK(j["eta"] == "3");
  REQUIRE(j["candidates"].size() == 4);
  CHECK(j["candidates"][0] ==
        json{{"p", 0}, {"q", 1}, {"w", "3"}, {"provenance", "translated"}});

  CHECK(sug_candidates_json(R"({"mode": "nope"})", &report) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("mode") != std::string::npos);
  CHECK(sug_candidates_json(R"({"mode": "bounded", "epsilon": "1", "x": 1})",
                            &report) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("unknown request key: x") !=
        std::string::npos);
  CHECK(sug_candidates_json(R"({"mode": "bounded", "epsilon": "0"})",
                            &report) == SUG_ERR_CONFIG);
}

TEST_CASE("proof traces serialize the ledger for one pair") {
  const char* request =
      R"({"u": "16", "v": "81", "epsilon": "1", "s_primes": [2, 3]})";
  char* report = nullptr;
  REQUIRE(sug_proof_trace_json(request, &report) == SUG_OK);
  const json j = take_json(report);
  CHECK(j["u"] == "16");
  CHECK(j["v"] == "81");
  CHECK(j["swapped"] == false);
  CHECK(j["params"]["k"] == 5);
  CHECK(j["params"]["h"] == 52);
  CHECK(j["params"]["n"] == 317);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["name"] == "unconditional-bound");
  CHECK(j["rows"][0]["holds"] == true);
}

TEST_CASE("a vanishing double product still yields a proof trace") {
  const char* request =
      R"({"u": "-1", "v": "-1", "epsilon": "4", "s_primes": [5]})";
  char* report = nullptr;
  REQUIRE(sug_proof_trace_json(request, &report) == SUG_OK);
  const json j = take_json(report);
  CHECK(j["double_product"]["vanishes"] == true);
  CHECK(j["double_product"]["log"].is_null());
  CHECK(j["all_checked_hold"] == true);
}

TEST_CASE("proof trace inputs are validated") {
  char* report = nullptr;
  CHECK(sug_proof_trace_json(
            R"({"u": "1", "v": "81", "epsilon": "1", "s_primes": [2, 3]})",
            &report) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("u: must not equal 1") !=
        std::string::npos);
  CHECK(sug_proof_trace_json(
            R"({"u": "5/7", "v": "81", "epsilon": "1", "s_primes": [2, 3]})",
            &report) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("u, v:") != std::string::npos);
  CHECK(sug_proof_trace_json(
            R"({"u": "16", "v": "81", "epsilon": "0", "s_primes": [2, 3]})",
            &report) == SUG_ERR_CONFIG);
  CHECK(std::string(sug_last_error()).find("epsilon: must be positive") !=
        std::string::npos);
  CHECK(sug_proof_trace_json(
            R"({"u": "16", "v": "81", "epsilon": "1", "s_primes": [4]})",
            &report) == SUG_ERR_CONFIG);
}

TEST_CASE("the selfcheck suites all pass") {
  char* report = nullptr;
  int all = -1;
  REQUIRE(sug_selfcheck_json(&report, &all) == SUG_OK);
  CHECK(all == 1);
  const json j = take_json(report);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["suites"].is_array());
  REQUIRE(!j["suites"].empty());
  for (const json& suite : j["suites"]) {
    CHECK(suite["passed"] == true);
    CHECK(suite["cases"].get<long>() > 0);
    CHECK(!suite.contains("detail"));  // only present on failure
  }
}
