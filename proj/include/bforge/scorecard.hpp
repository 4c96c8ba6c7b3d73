#ifndef BFORGE_SCORECARD_HPP
#define BFORGE_SCORECARD_HPP

#include <functional>
#include <string>
#include <vector>

namespace bforge {

struct CheckResult {
  std::string id;
  std::string label;
  bool pass = false;
  double ms = 0.0;
  std::string detail;  // populated on failure or for context
};

struct Scorecard {
  std::vector<CheckResult> checks;  // sorted by id
  bool all_pass() const;
  std::string table() const;
  std::string json() const;
};

struct Check {
  std::string id;
  std::string label;
  std::function<bool(std::string&)> fn;
};

const std::vector<Check>& check_registry();

/// runs every registered check whose id starts with the prefix; checks run in
/// a worker pool capped by BURAU_FORGE_THREADS; individual failures are
/// recorded, never aborting the suite
Scorecard run_checks(const std::string& prefix = "", unsigned threads = 0);

}  // namespace bforge

#endif
