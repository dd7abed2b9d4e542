#pragma once

// Deterministic exact-identity suites runnable from the command line: the
// product formula, the gcd bridge, the height decomposition identity, the
// closed-form linear-form identities of the auxiliary point, and the parser
// round-trip.  Every case is decided exactly; a failure names the suite.

#include <string>
#include <vector>

#include "json.hpp"

namespace sunitgcd {

struct SelfCheckSuite {
  std::string name;
  long cases = 0;
  bool passed = false;
  std::string detail;  // first failure description, empty when passed
};

struct SelfCheckReport {
  std::vector<SelfCheckSuite> suites;
  bool all_passed = false;
};

SelfCheckReport run_selfcheck();

nlohmann::ordered_json selfcheck_json(const SelfCheckReport& report);

}  // namespace sunitgcd
