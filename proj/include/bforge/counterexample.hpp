#ifndef BFORGE_COUNTEREXAMPLE_HPP
#define BFORGE_COUNTEREXAMPLE_HPP

#include "bforge/burau.hpp"
#include "bforge/similitude.hpp"

namespace bforge {

/// the 7-letter elementary word whose lift seeds the construction
GenWord counterexample_word(const Field* F);

/// SL_2 lift of the 7-letter product; entries match the fixed display and
/// satisfy det C = 1 and bar(C) D2 C^T = D2
LMat build_C(const Field* F);
/// the display the lift is checked against
LMat printed_C(const Field* F);

struct CounterexampleReport {
  LMat C, Bprime, A0;
  FMat W_minus1;         // correction factor evaluated at t = -1
  FMat A_at_minus1;      // A0|_{t=-1} * W_minus1
  std::vector<std::pair<std::string, bool>> checks;
  bool pass() const {
    for (const auto& [k, v] : checks)
      if (!v) return false;
    return true;
  }
  bool check(const std::string& name) const;
};

/// B' = C h~_{-1} C h~_{-1}; B places B' in rows/cols {1,2} with 1 at (3,3);
/// A0 = M^-1 B M. Populates every pipeline check except the final eigencheck.
CounterexampleReport assemble_A0(const Field* F);

/// Lemma-style eigencheck of A = A0 * (image of s1^-58854 (s3 s2 s3)^19618)
/// at t = -1 through integer fast powers; appends its checks to the report
bool final_eigencheck(CounterexampleReport& rep);

/// same pipeline with small substitute exponents (a, b) materialized
/// symbolically: A_mat = A0 * beta(s1^a (s3 s2 s3)^b)
struct MaterializedCheck {
  long a, b;
  bool laurent, det_unit, eval_consistent;
};
MaterializedCheck materialize_exponents(const CounterexampleReport& rep, long a, long b);

/// diag(1, A) with the membership report of the target size
struct EmbedReport {
  LMat embedded;
  GammaReport gamma;
};
EmbedReport hereditary_embed(const LMat& a, BurauKind kind);

}  // namespace bforge

#endif
