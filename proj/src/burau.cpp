#include "bforge/burau.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace bforge {

namespace {

// 2x2 blocks of the unreduced generators and their inverses
void place_block(LMat& m, std::size_t r0, std::size_t c0,
                 const std::vector<std::vector<LaurentPoly>>& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) m.at(r0 + i, c0 + j) = b[i][j];
}

}  // namespace

LMat burau_gen(int strands, int index, int sign, BurauKind kind, const Field* F) {
  if (strands < 2) throw Error("need at least 2 strands");
  if (index < 1 || index >= strands) throw Error("generator index out of range");
  if (sign != 1 && sign != -1) throw Error("sign must be +-1");
  const LaurentPoly z(F), one = LaurentPoly::one(F);
  const LaurentPoly t = LaurentPoly::t(F), ti = LaurentPoly::t(F, -1);
  const std::size_t n = static_cast<std::size_t>(strands);
  if (kind == BurauKind::Unreduced) {
    LMat m = LMat::identity(n, one);
    std::size_t i = static_cast<std::size_t>(index - 1);
    if (sign > 0)
      place_block(m, i, i, {{one - t, t}, {one, z}});
    else
      place_block(m, i, i, {{z, one}, {ti, one - ti}});
    return m;
  }
  const std::size_t d = n - 1;
  LMat m = LMat::identity(d, one);
  if (strands == 2) {
    m.at(0, 0) = sign > 0 ? -t : -ti;
    return m;
  }
  if (index == 1) {
    if (sign > 0)
      place_block(m, 0, 0, {{-t, one}, {z, one}});
    else
      place_block(m, 0, 0, {{-ti, ti}, {z, one}});
  } else if (index == strands - 1) {
    if (sign > 0)
      place_block(m, d - 2, d - 2, {{one, z}, {t, -t}});
    else
      place_block(m, d - 2, d - 2, {{one, z}, {one, -ti}});
  } else {
    std::size_t r = static_cast<std::size_t>(index - 2);
    if (sign > 0)
      place_block(m, r, r, {{one, z, z}, {t, -t, one}, {z, z, one}});
    else
      place_block(m, r, r, {{one, z, z}, {one, -ti, ti}, {z, z, one}});
  }
  return m;
}

LMat burau_matrix(const BraidWord& w, BurauKind kind, const Field* F) {
  std::size_t dim = kind == BurauKind::Unreduced
                        ? static_cast<std::size_t>(w.strands())
                        : static_cast<std::size_t>(w.strands() - 1);
  LMat acc = LMat::identity(dim, LaurentPoly::one(F));
  for (const auto& l : w.letters())
    acc = acc * burau_gen(w.strands(), l.index, l.sign, kind, F);
  return acc;
}

LMat squier_form(int n, const Field* F) {
  LMat j(static_cast<std::size_t>(n), static_cast<std::size_t>(n), LaurentPoly(F));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c)
        j.at(r, c) = LaurentPoly::one(F);
      else if (r < c)
        j.at(r, c) = -LaurentPoly::t(F, -1);
      else
        j.at(r, c) = -LaurentPoly::t(F);
    }
  return j;
}

LMat power_row(int n, const Field* F) {
  LMat v(1, static_cast<std::size_t>(n), LaurentPoly(F));
  for (int c = 0; c < n; ++c) v.at(0, c) = LaurentPoly::t(F, c + 1);
  return v;
}

LMat ones_column(int n, const Field* F) {
  return LMat(static_cast<std::size_t>(n), 1, LaurentPoly::one(F));
}

bool is_permutation_matrix(const FMat& a) {
  if (!a.square()) return false;
  const std::size_t n = a.rows();
  std::vector<bool> col_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0, where = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElem& x = a.at(i, j);
      if (x.is_zero()) continue;
      if (!x.is_one()) return false;
      ++ones;
      where = j;
    }
    if (ones != 1 || col_used[where]) return false;
    col_used[where] = true;
  }
  return true;
}

GammaReport gamma_membership(const LMat& a) {
  if (!a.square()) throw Error("gamma membership needs a square matrix");
  const Field* F = a.proto().field();
  const int n = static_cast<int>(a.rows());
  GammaReport rep;
  rep.row_fixed = power_row(n, F) * a == power_row(n, F);
  rep.ones_fixed = a * ones_column(n, F) == ones_column(n, F);
  rep.unitary = unitary_defect(a, squier_form(n, F)).is_zero();
  rep.perm_at_one = is_permutation_matrix(mat_eval(a, F->one()));
  return rep;
}

DiagData::DiagData(const Field* field) : F(field) {
  const LaurentPoly one = LaurentPoly::one(F), z(F);
  const LaurentPoly t = LaurentPoly::t(F), ti = LaurentPoly::t(F, -1);
  LMat m(3, 3, z);
  m.at(0, 1) = one;
  m.at(1, 0) = one + ti;
  m.at(1, 1) = -ti;
  m.at(2, 1) = -ti;
  m.at(2, 2) = LaurentPoly::t(F, -2) * (one + t);
  M = to_ratfunc(m);
  M_inv = M.inverse();
  D = LMat::identity(3, one);
  D.at(1, 1) = LaurentPoly::phi(F);
  D.at(2, 2) = LaurentPoly::phi(F);
  RMat s1r = M * to_ratfunc(burau_gen(4, 1, 1, BurauKind::Reduced, F)) * M_inv;
  RMat s3r = M * to_ratfunc(burau_gen(4, 3, 1, BurauKind::Reduced, F)) * M_inv;
  s2 = M * to_ratfunc(burau_gen(4, 2, 1, BurauKind::Reduced, F)) * M_inv;
  if (!is_laurent_matrix(s1r) || !is_laurent_matrix(s3r))
    throw Error("internal: s1/s3 must be Laurent");
  s1 = to_laurent(s1r);
  s3 = to_laurent(s3r);
  J4p = mat_bar(M).inverse() * to_ratfunc(D) * M.transpose().inverse();
}

const DiagData& diag_data(const Field* F) {
  static std::map<const Field*, std::unique_ptr<DiagData>>* cache =
      new std::map<const Field*, std::unique_ptr<DiagData>>();
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(F);
  if (it == cache->end())
    it = cache->emplace(F, std::make_unique<DiagData>(F)).first;
  return *it->second;
}

RMat conj_M(const RMat& a, ConjDir dir, const DiagData& dd) {
  if (a.rows() != 3 || a.cols() != 3) throw Error("conj_M needs a 3x3 matrix");
  return dir == ConjDir::Forward ? dd.M * a * dd.M_inv : dd.M_inv * a * dd.M;
}

RMat conj_M(const LMat& a, ConjDir dir, const DiagData& dd) {
  return conj_M(to_ratfunc(a), dir, dd);
}

bool is_laurent_matrix(const RMat& a) { return all_laurent(a); }

const std::vector<FMat>& reduced_images_at_one(const Field* F) {
  static std::map<const Field*, std::vector<FMat>>* cache =
      new std::map<const Field*, std::vector<FMat>>();
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(F);
  if (it != cache->end()) return it->second;
  // closure of {I} under the generator evaluations: the image at t=1 is the
  // symmetric group S_4, 24 matrices
  std::vector<FMat> gens;
  for (int i = 1; i <= 3; ++i)
    gens.push_back(mat_eval(burau_gen(4, i, 1, BurauKind::Reduced, F), F->one()));
  std::vector<FMat> seen{FMat::identity(3, F->one())};
  std::size_t frontier = 0;
  while (frontier < seen.size()) {
    FMat cur = seen[frontier++];
    for (const auto& g : gens) {
      FMat nxt = cur * g;
      bool found = false;
      for (const auto& s : seen)
        if (s == nxt) {
          found = true;
          break;
        }
      if (!found) seen.push_back(nxt);
    }
  }
  if (seen.size() != 24) throw Error("internal: expected 24 images at t=1");
  return (*cache)[F] = std::move(seen);
}

GammaPrimeReport gamma_prime_membership(const LMat& a) {
  if (a.rows() != 3 || a.cols() != 3) throw Error("expected a 3x3 matrix");
  const Field* F = a.proto().field();
  GammaPrimeReport rep;
  rep.integral = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      rep.integral = rep.integral && a.at(i, j).is_integral();
  LaurentPoly det = a.det();
  rep.det_unit = det.is_unit() && (det.leading().is_one() || (-det.leading()).is_one());
  const DiagData& dd = diag_data(F);
  RMat ar = to_ratfunc(a);
  rep.unitary_j4p = mat_bar(ar) * dd.J4p * ar.transpose() == dd.J4p;
  FMat at1 = mat_eval(a, F->one());
  for (const auto& s : reduced_images_at_one(F))
    if (s == at1) {
      rep.perm_coset = true;
      break;
    }
  return rep;
}

bool is_eigenvector(const FMat& a, const std::vector<FieldElem>& v) {
  if (!a.square() || a.rows() != v.size()) throw Error("shape mismatch");
  const std::size_t n = a.rows();
  const Field* F = v[0].field();
  std::vector<FieldElem> w(n, F->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] = w[i] + a.at(i, j) * v[j];
  // w == lambda v for some lambda: cross-ratios must vanish
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(w[i] * v[j] - w[j] * v[i]).is_zero()) return false;
  // exclude v = 0 mapping to nonzero (not possible here; v fixed nonzero)
  return true;
}

Lemma39 lemma39_predicates(const LMat& a) {
  if (a.rows() != 3 || a.cols() != 3) throw Error("expected a 3x3 matrix");
  const Field* F = a.proto().field();
  FieldElem m1 = -F->one();
  Lemma39 out;
  out.p1 = a.at(1, 0).eval(m1).is_zero() && a.at(1, 2).eval(m1).is_zero();
  FMat e = mat_eval(a, m1);
  std::vector<FieldElem> v1{F->one(), -F->one(), -F->one()};
  std::vector<FieldElem> v2{F->one(), F->one(), F->one()};
  out.p2 = is_eigenvector(e.transpose(), v1);
  out.p3 = is_eigenvector(e, v2);
  return out;
}

LMat embed_trivial(const LMat& a, BurauKind kind) {
  if (!a.square()) throw Error("expected a square matrix");
  if (kind == BurauKind::Unreduced) {
    if (!gamma_membership(a).pass()) throw Error("input fails the membership report");
  }
  const Field* F = a.proto().field();
  const std::size_t n = a.rows();
  LMat r = LMat::identity(n + 1, LaurentPoly::one(F));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i + 1, j + 1) = a.at(i, j);
  return r;
}

LMat mat_S(const Field* F) { return burau_matrix(braid_b1(), BurauKind::Reduced, F); }

LMat mat_T(const Field* F) { return burau_matrix(braid_b2(), BurauKind::Reduced, F); }

LMat mat_Sp(const Field* F) {
  const DiagData& dd = diag_data(F);
  RMat c = conj_M(mat_S(F), ConjDir::Forward, dd);
  if (!is_laurent_matrix(c)) throw Error("internal: S' must be Laurent");
  return to_laurent(c);
}

LMat mat_Tp(const Field* F) {
  const DiagData& dd = diag_data(F);
  RMat c = conj_M(mat_T(F), ConjDir::Forward, dd);
  if (!is_laurent_matrix(c)) throw Error("internal: T' must be Laurent");
  return to_laurent(c);
}

}  // namespace bforge
