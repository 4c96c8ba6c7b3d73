// Acceptance suite: runs every criterion at its stated tolerance (exact
// equality throughout) and prints one pass/fail line per criterion.
#include <chrono>
#include <iostream>
#include <vector>

#include "bforge/scorecard.hpp"

using namespace bforge;

namespace {

struct Criterion {
  int no;
  const char* name;
  double budget_s;
  std::vector<std::string> prefixes;
};

bool matches(const std::string& id, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "unitarity suites (defect zero, scalar one)", 30.0, {"eq1.", "eq8."}},
      {2, "braid identities under the free-group action", 1.0,
       {"eq2.", "eq3.", "eq4.", "eq5", "eq6", "eq7", "remark38."}},
      {3, "printed-matrix fidelity", 1.0, {"print."}},
      {4, "similitude relations across fields", 5.0,
       {"eq11.", "eq12.", "eq13.", "eq15", "eq16", "eq17", "key.", "cd."}},
      {5, "counterexample pipeline", 10.0, {"counterexample."}},
      {6, "normal-form round trips", 60.0, {"nf."}},
      {7, "building suite", 60.0,
       {"lemma43.", "rel18", "rel19.", "rel20.", "eq21.", "phi.", "eq22."}},
      {8, "desk-scale link at radius two", 300.0, {"lemma47."}},
      {9, "foldings: rank, weights, printed expressions", 5.0,
       {"stallings.rank9", "stallings.fquotient", "stallings.l-consistency"}},
      {10, "property suites", 60.0, {"prop."}},
  };

  const auto& reg = check_registry();
  bool all = true;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t total = 0, passed = 0;
    std::string failures;
    for (const auto& c : reg) {
      if (!matches(c.id, cr.prefixes)) continue;
      ++total;
      std::string detail;
      bool ok = false;
      try {
        ok = c.fn(detail);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      if (ok)
        ++passed;
      else
        failures += " " + c.id + (detail.empty() ? "" : (" [" + detail + "]"));
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < cr.budget_s;
    bool ok = passed == total && total > 0 && in_budget;
    all = all && ok;
    char line[160];
    std::snprintf(line, sizeof line,
                  "%s  criterion-%02d  %-48s  %zu/%zu checks, %.1f s (budget %.0f s)",
                  ok ? "PASS" : "FAIL", cr.no, cr.name, passed, total, secs, cr.budget_s);
    std::cout << line;
    if (!failures.empty()) std::cout << "  failing:" << failures;
    if (!in_budget) std::cout << "  over budget";
    std::cout << "\n";
  }
  std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return all ? 0 : 1;
}
