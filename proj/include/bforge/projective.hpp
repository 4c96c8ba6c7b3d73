#ifndef BFORGE_PROJECTIVE_HPP
#define BFORGE_PROJECTIVE_HPP

#include "bforge/matrix.hpp"

namespace bforge {

/// Canonical representative of a projective matrix class: Laurent entries,
/// no common polynomial or t-power factor, and the first nonzero entry in
/// row-major order has leading coefficient 1. Unique per class, so projective
/// equality is plain equality of representatives.
LMat proj_canonical(const RMat& a);
LMat proj_canonical(const LMat& a);

/// Projective matrix with group operations through canonical forms.
class ProjMat {
 public:
  ProjMat() = default;
  explicit ProjMat(const LMat& rep) : rep_(proj_canonical(rep)) {}
  explicit ProjMat(const RMat& rep) : rep_(proj_canonical(rep)) {}

  const LMat& rep() const { return rep_; }
  std::size_t dim() const { return rep_.rows(); }
  const Field* field() const { return rep_.proto().field(); }

  ProjMat operator*(const ProjMat& o) const { return ProjMat(rep_ * o.rep_); }
  ProjMat inv() const;
  ProjMat pow(long e) const;
  bool operator==(const ProjMat& o) const { return rep_ == o.rep_; }
  bool operator!=(const ProjMat& o) const { return !(*this == o); }
  bool is_identity() const;

  static ProjMat identity(std::size_t n, const Field* F);

  FMat eval(const FieldElem& x) const { return mat_eval(rep_, x); }
  ProjMat embedded_in(const Field* bigger) const {
    return ProjMat(mat_embed(rep_, bigger));
  }

  std::string str() const;

 private:
  LMat rep_;
};

}  // namespace bforge

#endif
