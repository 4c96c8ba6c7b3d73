#ifndef BFORGE_BURAU_HPP
#define BFORGE_BURAU_HPP

#include "bforge/braid.hpp"
#include "bforge/projective.hpp"

namespace bforge {

enum class BurauKind { Unreduced, Reduced };

/// generator image; closed-form inverses, no matrix inversion involved
LMat burau_gen(int strands, int index, int sign, BurauKind kind, const Field* F);
/// product of generator images in word order; the identity word maps to I
LMat burau_matrix(const BraidWord& w, BurauKind kind, const Field* F);

/// the form J_n: 1 on the diagonal, -t below, -t^-1 above
LMat squier_form(int n, const Field* F);
/// row vector (t, t^2, ..., t^n)
LMat power_row(int n, const Field* F);
/// column of ones
LMat ones_column(int n, const Field* F);

bool is_permutation_matrix(const FMat& a);

struct GammaReport {
  bool row_fixed = false;       // v_n A = v_n
  bool ones_fixed = false;      // A 1_n = 1_n
  bool unitary = false;         // bar(A) J_n A^T = J_n
  bool perm_at_one = false;     // A|_{t=1} is a permutation matrix
  bool pass() const { return row_fixed && ones_fixed && unitary && perm_at_one; }
};
GammaReport gamma_membership(const LMat& a);

/// conjugation data of the diagonalized picture for the reduced B_4 image
struct DiagData {
  explicit DiagData(const Field* F);
  const Field* F;
  RMat M, M_inv;
  LMat D;             // diag(1, t+1/t, t+1/t)
  LMat s1, s3;        // Laurent conjugates of the generator images
  RMat s2;            // carries (1+t) denominators
  RMat J4p;           // bar(M)^-1 D (M^T)^-1
};
const DiagData& diag_data(const Field* F);

enum class ConjDir { Forward, Backward };  // M A M^-1 resp. M^-1 A M
RMat conj_M(const LMat& a, ConjDir dir, const DiagData& dd);
RMat conj_M(const RMat& a, ConjDir dir, const DiagData& dd);
bool is_laurent_matrix(const RMat& a);

struct GammaPrimeReport {
  bool integral = false;       // Laurent entries with integer coefficients
  bool det_unit = false;       // determinant is +-t^k
  bool unitary_j4p = false;    // bar(A) J'_4 A^T = J'_4
  bool perm_coset = false;     // A|_{t=1} among the 24 reduced images
  std::string form = "J'_4 = bar(M)^-1 D M^-T";
  bool pass() const { return integral && det_unit && unitary_j4p && perm_coset; }
};
GammaPrimeReport gamma_prime_membership(const LMat& a);

/// the 24 evaluations at t=1 of the reduced B_4 image, one per permutation
const std::vector<FMat>& reduced_images_at_one(const Field* F);

struct Lemma39 {
  bool p1 = false;  // A_21 and A_23 vanish at t=-1
  bool p2 = false;  // (1,-1,-1)^T is an eigenvector of A^T|_{t=-1}
  bool p3 = false;  // (1,1,1)^T is an eigenvector of A|_{t=-1}
};
Lemma39 lemma39_predicates(const LMat& a);

bool is_eigenvector(const FMat& a, const std::vector<FieldElem>& v);

/// diag(1, A); membership verified for the unreduced kind
LMat embed_trivial(const LMat& a, BurauKind kind);

// the distinguished matrices of the reduced B_4 picture
LMat mat_S(const Field* F);        // image of b_1
LMat mat_T(const Field* F);        // image of b_2
LMat mat_Sp(const Field* F);       // M S M^-1 = diag(1, -t, -1/t)
LMat mat_Tp(const Field* F);       // M T M^-1

}  // namespace bforge

#endif
