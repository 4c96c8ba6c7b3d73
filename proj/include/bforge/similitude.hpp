#ifndef BFORGE_SIMILITUDE_HPP
#define BFORGE_SIMILITUDE_HPP

#include "bforge/projective.hpp"

namespace bforge {

/// Letter of the 2x2 similitude calculus.
struct GenId {
  enum class Type { G, H0, Hm1, AU, AL, E2t, E4, Et2 };
  Type type = Type::H0;
  FieldElem r;    // G only
  LaurentPoly f;  // AU/AL only; a polynomial in the formal variable

  static GenId g(const FieldElem& r_);
  static GenId h0() { return GenId{Type::H0, {}, {}}; }
  static GenId hm1() { return GenId{Type::Hm1, {}, {}}; }
  static GenId au(const LaurentPoly& f_);
  static GenId al(const LaurentPoly& f_);
  static GenId e2t() { return GenId{Type::E2t, {}, {}}; }
  static GenId e4() { return GenId{Type::E4, {}, {}}; }
  static GenId et2() { return GenId{Type::Et2, {}, {}}; }

  bool operator==(const GenId& o) const;
  bool same_factor(const GenId& o) const { return *this == o; }
  std::string str() const;
};

/// Word in the generators; adjacent equal letters merge, zero exponents drop.
class GenWord {
 public:
  GenWord() = default;
  void append(const GenId& id, long exp);
  const std::vector<std::pair<GenId, long>>& letters() const { return w_; }
  bool empty() const { return w_.empty(); }
  std::size_t size() const { return w_.size(); }
  bool operator==(const GenWord& o) const { return w_ == o.w_; }
  std::string str() const;

 private:
  std::vector<std::pair<GenId, long>> w_;
};

/// 2x2 form diag(1, t^-1 + t)
LMat form_d2(const Field* F);

/// the printed lift of a generator letter (exact entries, not canonicalized)
LMat gen_lift(const GenId& id, const Field* F);
ProjMat gen_proj(const GenId& id, const Field* F);
ProjMat word_matrix(const GenWord& w, const Field* F);

// relation checks; projective where the relation lives in the projective
// group, exact matrix identities for the lifted ones
bool rel11(const FieldElem& r);
bool rel12(const FieldElem& r);                   // r != 0
bool rel13(const LaurentPoly& f);                 // char 2
bool rel15(const Field* F);                       // lifted, char != 2
bool rel16(const Field* F);                       // lifted, char != 2
bool rel17(const Field* F);                       // lifted bundle, char 2
bool rel_key(const Field* F);                     // d c d^-1 = c^-1 (d^-1 c d) c
bool verify_relation(const std::string& id, const FieldElem& r,
                     const LaurentPoly& f, const Field* F);

/// c = h0-lift; d = the 2x2 block of the centralizer part after splitting off
/// the determinant
std::pair<LMat, LMat> cd_matrices(const Field* F);
/// d agrees with the 2x2 block of the diagonalized (s3 s2 s3)^2 s3^-6
bool cd_consistent(const Field* F);

struct NormalFormResult {
  bool found = false;
  GenWord word;
  int bound = 0;
};

/// bounded iterative-deepening normal-form search over elementary letters,
/// guided by a strictly decreasing degree-span norm; candidates are read off
/// the top/bottom coefficient structure of the canonical representative
NormalFormResult q_normal_form(const ProjMat& w, const Field* F, int max_len);

/// membership of the word's normal form in the closure of the basis letters
bool subgroup_member_basis(const GenWord& w, const std::vector<GenId>& basis,
                           const Field* F);

std::string genword_str(const GenWord& w);

}  // namespace bforge

#endif
