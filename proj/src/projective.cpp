#include "bforge/projective.hpp"

namespace bforge {

LMat laurent_inverse(const LMat& a) {
  LaurentPoly d = a.det();
  if (!d.is_unit()) throw Error("determinant is not a unit");
  RMat inv = to_ratfunc(a).inverse();
  if (!all_laurent(inv)) throw Error("matrix is not invertible over the Laurent ring");
  return to_laurent(inv);
}

std::optional<LaurentPoly> projective_unitary_scalar(const LMat& a, const LMat& j) {
  LMat p = mat_bar(a) * j * a.transpose();
  // k = p_ij / j_ij at the first nonzero entry of j, then verify p == k*j
  for (std::size_t i = 0; i < j.rows(); ++i)
    for (std::size_t c = 0; c < j.cols(); ++c) {
      if (j.at(i, c).is_zero()) continue;
      RatFunc k = RatFunc::from_laurent(p.at(i, c)) / RatFunc::from_laurent(j.at(i, c));
      if (!k.is_laurent()) return std::nullopt;
      LaurentPoly kl = k.to_laurent();
      if (!kl.is_unit()) return std::nullopt;
      if (p == j * kl) return kl;
      return std::nullopt;
    }
  return std::nullopt;
}

LMat proj_canonical(const RMat& a) {
  const Field* F = a.proto().field();
  // clear denominators with the monic lcm
  LaurentPoly l = LaurentPoly::one(F);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RatFunc& x = a.at(i, j);
      if (!x.is_zero()) l = poly_lcm_monic(l, x.den());
    }
  RatFunc lf = RatFunc::from_laurent(l);
  LMat c(a.rows(), a.cols(), LaurentPoly(F));
  bool any = false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = (a.at(i, j) * lf).to_laurent();
      any = any || !c.at(i, j).is_zero();
    }
  if (!any) throw Error("projective class of the zero matrix");
  // strip the common t power, then the common monic polynomial factor (the
  // per-entry t factors are coprime to the t-free gcd once the global strip
  // has run)
  long m = 0;
  bool first = true;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!c.at(i, j).is_zero()) {
        m = first ? c.at(i, j).min_deg() : std::min(m, c.at(i, j).min_deg());
        first = false;
      }
  LaurentPoly g(F);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c.at(i, j).is_zero()) continue;
      c.at(i, j) = c.at(i, j).shifted(-m);
      LaurentPoly p = c.at(i, j);
      if (p.min_deg() > 0) p = p.shifted(-p.min_deg());
      g = g.is_zero() ? p : poly_gcd_monic(g, p);
    }
  if (!g.is_one()) {
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (c.at(i, j).is_zero()) continue;
        long sh = c.at(i, j).min_deg();
        auto [q, r] = poly_divmod(c.at(i, j).shifted(-sh), g);
        if (!r.is_zero()) throw Error("internal: content division not exact");
        c.at(i, j) = q.shifted(sh);
      }
  }
  // scale so the first nonzero entry has leading coefficient 1
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c.at(i, j).is_zero()) continue;
      FieldElem lead = c.at(i, j).leading();
      if (!lead.is_one()) {
        FieldElem li = lead.inv();
        for (std::size_t u = 0; u < c.rows(); ++u)
          for (std::size_t v = 0; v < c.cols(); ++v) c.at(u, v) = c.at(u, v) * li;
      }
      return c;
    }
  throw Error("unreachable");
}

LMat proj_canonical(const LMat& a) { return proj_canonical(to_ratfunc(a)); }

ProjMat ProjMat::inv() const { return ProjMat(to_ratfunc(rep_).inverse()); }

ProjMat ProjMat::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  ProjMat base = *this;
  ProjMat r = identity(rep_.rows(), field());
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool ProjMat::is_identity() const {
  return rep_ == LMat::identity(rep_.rows(), rep_.proto());
}

ProjMat ProjMat::identity(std::size_t n, const Field* F) {
  return ProjMat(LMat::identity(n, LaurentPoly::one(F)));
}

std::string ProjMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rep_.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < rep_.cols(); ++j) {
      if (j) s += ", ";
      s += rep_.at(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace bforge
