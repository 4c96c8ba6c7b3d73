#include "bforge/building.hpp"

#include <algorithm>

#include "bforge/burau.hpp"
#include "bforge/matrix_io.hpp"

namespace bforge {

namespace {

long val_or_inf(const RatFunc& f, long inf) { return f.is_zero() ? inf : val_inf(f); }

// coefficient of t^{-v(f)} in the expansion at infinity; denominators are
// monic so this is the leading numerator coefficient
FieldElem lead_inf(const RatFunc& f) { return f.num().leading(); }

// principal part of f modulo pi^a: the expansion terms with pi-exponent < a;
// f minus the result has valuation >= a
RatFunc principal_part(RatFunc f, long a) {
  const Field* F = f.field();
  RatFunc red = RatFunc::zero(F);
  while (!f.is_zero() && val_inf(f) < a) {
    long v = val_inf(f);
    RatFunc term = RatFunc::from_laurent(
        LaurentPoly::monomial(lead_inf(f), -v));
    red = red + term;
    f = f - term;
  }
  return red;
}

constexpr long kInfVal = 1000000;

}  // namespace

LatticeClass LatticeClass::canonical(const RMat& x) {
  if (x.rows() != 3 || x.cols() != 3) throw Error("lattice representative must be 3x3");
  if (x.det().is_zero()) throw Error("singular lattice representative");
  const Field* F = x.proto().field();
  RMat t = x;
  std::array<std::size_t, 3> pivot_row{9, 9, 9};
  std::array<long, 3> pivot_val{0, 0, 0};
  std::array<bool, 3> row_used{false, false, false};
  for (std::size_t s = 0; s < 3; ++s) {
    // minimal valuation among unused rows and unprocessed columns,
    // ties by row index then column index
    long best = kInfVal;
    std::size_t br = 9, bc = 9;
    for (std::size_t i = 0; i < 3; ++i) {
      if (row_used[i]) continue;
      for (std::size_t c = s; c < 3; ++c) {
        long v = val_or_inf(t.at(i, c), kInfVal);
        if (v < best) {
          best = v;
          br = i;
          bc = c;
        }
      }
    }
    if (br == 9) throw Error("internal: singular in lattice reduction");
    if (bc != s)
      for (std::size_t i = 0; i < 3; ++i) std::swap(t.at(i, bc), t.at(i, s));
    // normalize the pivot to pi^a: divide the column by the unit part
    RatFunc unit = t.at(br, s) * RatFunc::t(F, best);  // valuation 0
    RatFunc uinv = unit.inv();
    for (std::size_t i = 0; i < 3; ++i) t.at(i, s) = t.at(i, s) * uinv;
    // clear the pivot row in later columns
    for (std::size_t c = s + 1; c < 3; ++c) {
      if (t.at(br, c).is_zero()) continue;
      RatFunc q = t.at(br, c) * RatFunc::t(F, best);  // entry / pi^a, in O
      for (std::size_t i = 0; i < 3; ++i)
        t.at(i, c) = t.at(i, c) - q * t.at(i, s);
    }
    pivot_row[s] = br;
    pivot_val[s] = best;
    row_used[br] = true;
  }
  // below-pivot reduction: entry at (pivot_row[k], j) for k > j is reduced to
  // its principal part modulo pi^{a_k}
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      RatFunc e = t.at(pivot_row[k], j);
      if (e.is_zero()) continue;
      RatFunc red = principal_part(e, pivot_val[k]);
      RatFunc q = (e - red) * RatFunc::t(F, pivot_val[k]);  // in O
      for (std::size_t i = 0; i < 3; ++i)
        t.at(i, j) = t.at(i, j) - q * t.at(i, k);
    }
  // scalar normalization: smallest pivot exponent becomes 0
  long mn = std::min({pivot_val[0], pivot_val[1], pivot_val[2]});
  if (mn != 0) {
    RatFunc scale = RatFunc::t(F, mn);  // pi^{-mn}
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t c = 0; c < 3; ++c) t.at(i, c) = t.at(i, c) * scale;
  }
  LatticeClass out;
  out.rep_ = t;
  out.key_ = matrix_str(t);
  long v = val_inf(t.det());
  out.type_ = static_cast<int>(((-v) % 3 + 3) % 3);
  return out;
}

bool lattice_equal_oracle(const RMat& x1, const RMat& x2) {
  RMat r = x1.inverse() * x2;
  long mn = kInfVal;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mn = std::min(mn, val_or_inf(r.at(i, j), kInfVal));
  if (mn == kInfVal) return false;
  const Field* F = r.proto().field();
  RMat u = r * RatFunc::t(F, mn);  // v(t^mn) = -mn, so the min valuation is 0
  return val_inf(u.det()) == 0;
}

std::array<long, 3> elem_divisors(const RMat& x1, const RMat& x2) {
  RMat r = x1.inverse() * x2;
  std::array<long, 3> exps{0, 0, 0};
  for (std::size_t s = 0; s < 3; ++s) {
    long best = kInfVal;
    std::size_t br = 9, bc = 9;
    for (std::size_t i = s; i < 3; ++i)
      for (std::size_t c = s; c < 3; ++c) {
        long v = val_or_inf(r.at(i, c), kInfVal);
        if (v < best) {
          best = v;
          br = i;
          bc = c;
        }
      }
    if (br == 9) throw Error("singular matrix in divisor computation");
    if (br != s)
      for (std::size_t c = 0; c < 3; ++c) std::swap(r.at(br, c), r.at(s, c));
    if (bc != s)
      for (std::size_t i = 0; i < 3; ++i) std::swap(r.at(i, bc), r.at(i, s));
    for (std::size_t i = s + 1; i < 3; ++i) {
      if (r.at(i, s).is_zero()) continue;
      RatFunc q = r.at(i, s) / r.at(s, s);  // valuation >= 0
      for (std::size_t c = 0; c < 3; ++c) r.at(i, c) = r.at(i, c) - q * r.at(s, c);
    }
    for (std::size_t c = s + 1; c < 3; ++c) {
      if (r.at(s, c).is_zero()) continue;
      RatFunc q = r.at(s, c) / r.at(s, s);
      for (std::size_t i = 0; i < 3; ++i) r.at(i, c) = r.at(i, c) - q * r.at(i, s);
    }
    exps[s] = best;
  }
  std::sort(exps.begin(), exps.end());
  long base = exps[0];
  for (auto& e : exps) e -= base;
  return exps;
}

bool adjacent(const RMat& x1, const RMat& x2) {
  auto e = elem_divisors(x1, x2);
  return (e[0] == 0 && e[1] == 0 && e[2] == 1) ||
         (e[0] == 0 && e[1] == 1 && e[2] == 1);
}

bool adjacent(const LatticeClass& l1, const LatticeClass& l2) {
  return adjacent(l1.rep(), l2.rep());
}

// ---- generators -----------------------------------------------------------

ProjMat gen_u0(const Field* F) {
  LMat m = LMat::identity(3, LaurentPoly::one(F));
  m.at(0, 0) = LaurentPoly::monomial(F->imaginary_unit(), 1);
  return ProjMat(m);
}

ProjMat gen_uinf(const Field* F) {
  LMat m = LMat::identity(3, LaurentPoly::one(F));
  m.at(1, 1) = LaurentPoly::monomial(F->imaginary_unit(), 1);
  return ProjMat(m);
}

ProjMat gen_uk(const mpq_class& r, const Field* F) {
  if (r < 0) throw Error("unipotent generator needs r >= 0");
  if (r == 0) return gen_u0(F);
  if (!F->has_i()) throw Error("unipotent generators live over a field with i");
  FieldElem i = F->imaginary_unit();
  FieldElem rf = F->from_rational(r);
  FieldElem r2 = rf * rf;
  FieldElem mu = (r2 + i) / (F->one() + i * r2);
  const LaurentPoly t = LaurentPoly::t(F);
  LMat m(3, 3, LaurentPoly(F));
  m.at(0, 0) = LaurentPoly::constant(r2) - t;
  m.at(0, 1) = LaurentPoly::monomial(-(rf * mu), 1);
  m.at(1, 0) = LaurentPoly::phi(F) * (-rf);
  m.at(1, 1) = (LaurentPoly::one(F) - t * LaurentPoly::constant(r2)) * mu;
  m.at(2, 2) = LaurentPoly::constant(r2 + i);
  return ProjMat(m);
}

ProjMat gen_uu(const FMat& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error("unitary parameter must be 2x2");
  const Field* F = a.proto().field();
  FMat prod = a * a.map([](const FieldElem& x) { return x.conj(); }).transpose();
  if (!(prod == FMat::identity(2, F->one()))) throw Error("parameter is not unitary");
  LMat m = LMat::identity(3, LaurentPoly::one(F));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m.at(i + 1, j + 1) = LaurentPoly::constant(a.at(i, j));
  return ProjMat(m);
}

ProjMat gen_ke(const FieldElem& r) {
  const Field* F = r.field();
  FieldElem r2 = r * r;
  FieldElem norm = F->one() + r2 * r2;
  auto normq = norm.as_rational();
  if (!normq) throw Error("1 + r^4 must be rational for the elementary generator");
  auto s = F->sqrt_rational(*normq);
  if (!s) throw Error("radical not adjoined: sqrt of " + norm.str());
  FieldElem si = s->inv();
  const LaurentPoly t = LaurentPoly::t(F);
  LMat m(3, 3, LaurentPoly(F));
  m.at(0, 0) = (LaurentPoly::constant(r2) - t) * si;
  m.at(0, 1) = LaurentPoly::monomial(-(r * si), 1);
  m.at(1, 0) = LaurentPoly::phi(F) * (-(r * si));
  m.at(1, 1) = (LaurentPoly::one(F) - t * LaurentPoly::constant(r2)) * si;
  m.at(2, 2) = LaurentPoly::one(F);
  return ProjMat(m);
}

ProjMat gen_oe(const FMat& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error("orthogonal parameter must be 2x2");
  const Field* F = a.proto().field();
  if (!(a * a.transpose() == FMat::identity(2, F->one())))
    throw Error("parameter is not orthogonal");
  LMat m = LMat::identity(3, LaurentPoly::one(F));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m.at(i + 1, j + 1) = LaurentPoly::constant(a.at(i, j));
  return ProjMat(m);
}

namespace {

FMat mat2(const Field* F, const FieldElem& a, const FieldElem& b, const FieldElem& c,
          const FieldElem& d) {
  FMat m(2, 2, F->zero());
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

FMat rot_matrix(const Field* F) {
  return mat2(F, F->zero(), F->one(), -F->one(), F->zero());
}

}  // namespace

ProjMat named_gen(NamedGen which, const Field* F) {
  if (!F->has_i()) throw Error("named generators live over a field with i");
  FieldElem i = F->imaginary_unit(), z = F->zero(), one = F->one();
  switch (which) {
    case NamedGen::D1: return gen_uinf(F);
    case NamedGen::D2: {
      ProjMat u = gen_uu(rot_matrix(F));
      return u * gen_uinf(F) * u.inv();
    }
    case NamedGen::G1: return gen_uk(1, F);
    case NamedGen::G2: {
      ProjMat u = gen_uu(rot_matrix(F));
      return u * gen_uk(1, F) * u.inv();
    }
    case NamedGen::G3: {
      ProjMat u = gen_uu(mat2(F, i, z, z, -i));
      return u * gen_uk(1, F) * u.inv();
    }
    case NamedGen::G4: {
      ProjMat u = gen_uu(mat2(F, z, i, i, z));
      return u * gen_uk(1, F) * u.inv();
    }
  }
  throw Error("unreachable");
}

std::string named_gen_name(NamedGen which) {
  switch (which) {
    case NamedGen::D1: return "d1";
    case NamedGen::D2: return "d2";
    case NamedGen::G1: return "g1";
    case NamedGen::G2: return "g2";
    case NamedGen::G3: return "g3";
    case NamedGen::G4: return "g4";
  }
  throw Error("unreachable");
}

std::vector<ProjMat> standard_gens(const Field* F) {
  return {named_gen(NamedGen::D1, F), named_gen(NamedGen::D2, F),
          named_gen(NamedGen::G1, F), named_gen(NamedGen::G2, F),
          named_gen(NamedGen::G3, F), named_gen(NamedGen::G4, F)};
}

LMat form_d3(const Field* F) {
  LMat d = LMat::identity(3, LaurentPoly::one(F));
  d.at(1, 1) = LaurentPoly::phi(F);
  d.at(2, 2) = LaurentPoly::phi(F);
  return d;
}

// ---- unipotent kernel -----------------------------------------------------

namespace {

// scalar-normalized evaluation at t=-i when the class is unipotent there
std::optional<FMat> unipotent_eval(const ProjMat& b) {
  const Field* F = b.field();
  if (!F->has_i()) throw Error("needs a field with i");
  FMat e = b.eval(-F->imaginary_unit());
  const FieldElem& lam = e.at(0, 0);
  if (lam.is_zero()) return std::nullopt;
  FieldElem li = lam.inv();
  FMat s = e.map([&](const FieldElem& x) { return x * li; });
  for (std::size_t d = 1; d < 3; ++d)
    if (!s.at(d, d).is_one()) return std::nullopt;
  if (!s.at(1, 0).is_zero() || !s.at(2, 0).is_zero() || !s.at(2, 1).is_zero())
    return std::nullopt;
  return s;
}

}  // namespace

bool in_unipotent_kernel(const ProjMat& b) {
  auto s = unipotent_eval(b);
  if (!s) return false;
  LMat d3 = form_d3(b.field());
  RMat rep = to_ratfunc(b.rep());
  RMat p = mat_bar(rep) * to_ratfunc(d3) * rep.transpose();
  // projective unitarity with respect to diag(1, phi, phi)
  RatFunc k;
  bool have = false;
  for (std::size_t i = 0; i < 3 && !have; ++i)
    for (std::size_t j = 0; j < 3 && !have; ++j)
      if (!d3.at(i, j).is_zero()) {
        k = p.at(i, j) / RatFunc::from_laurent(d3.at(i, j));
        have = true;
      }
  return have && p == to_ratfunc(d3) * k;
}

std::pair<FieldElem, FieldElem> phi_map(const ProjMat& b) {
  auto s = unipotent_eval(b);
  if (!s || !s->at(1, 2).is_zero())
    throw Error("not in the domain of the coordinate map");
  return {s->at(0, 1), s->at(0, 2)};
}

// ---- section-level verifications ------------------------------------------

namespace {

const Field* tower_for(const std::vector<mpq_class>& radicands, bool with_i) {
  const Field* F = with_i ? Field::gaussian() : Field::rational();
  for (const auto& m : radicands) F = F->with_sqrt(m);
  return F;
}

FieldElem fsqrt(const Field* F, const mpq_class& m) {
  auto s = F->sqrt_rational(m);
  if (!s) throw Error("tower misses a radical");
  return *s;
}

}  // namespace

bool verify_lemma43(const mpq_class& r, std::string* tower) {
  mpq_class n = 1 + r * r * r * r;
  const Field* F = tower_for({n}, false);
  if (tower) *tower = F->tag();
  ProjMat ke = gen_ke(F->from_rational(r));
  const LaurentPoly t = LaurentPoly::t(F), one = LaurentPoly::one(F), z(F);
  FieldElem rf = F->from_rational(r);
  LMat x2(3, 3, z);
  x2.at(0, 0) = LaurentPoly::constant(rf * rf) - t;
  x2.at(0, 1) = LaurentPoly::monomial(-rf, 1);
  x2.at(1, 0) = LaurentPoly::phi(F) * (-rf);
  x2.at(1, 1) = one - t * LaurentPoly::constant(rf * rf);
  x2.at(2, 2) = one;
  LMat x3(3, 3, z);
  x3.at(0, 1) = LaurentPoly::monomial(-rf, 1);
  x3.at(1, 0) = LaurentPoly::constant(-(F->from_rational(n) / rf));
  x3.at(1, 1) = one - t * LaurentPoly::constant(rf * rf);
  x3.at(2, 2) = one;
  LMat x4(3, 3, z);
  x4.at(0, 0) = t;
  x4.at(1, 0) = LaurentPoly::monomial(rf, 1);
  x4.at(1, 1) = one;
  x4.at(2, 2) = one;
  LatticeClass l1 = LatticeClass::canonical(to_ratfunc(ke.rep()));
  LatticeClass l2 = LatticeClass::canonical(to_ratfunc(x2));
  LatticeClass l3 = LatticeClass::canonical(to_ratfunc(x3));
  LatticeClass l4 = LatticeClass::canonical(to_ratfunc(x4));
  bool eq = l1 == l2 && l2 == l3 && l3 == l4;
  bool oracle = lattice_equal_oracle(to_ratfunc(ke.rep()), to_ratfunc(x4));
  return eq && oracle;
}

bool verify_rel18() {
  const Field* F = Field::rational();
  const LaurentPoly one = LaurentPoly::one(F), t = LaurentPoly::t(F);
  LMat k0 = LMat::identity(3, one);
  k0.at(0, 0) = -t;
  LMat kinf = LMat::identity(3, one);
  kinf.at(1, 1) = -t;
  FMat rot = rot_matrix(F);
  ProjMat lhs = ProjMat(kinf) * ProjMat(k0);
  ProjMat rhs = gen_oe(rot) * ProjMat(kinf).inv() * gen_oe(rot.transpose());
  return lhs == rhs;
}

bool verify_rel19(const mpq_class& r, std::string* tower) {
  if (r <= 0) throw Error("rel19 needs r > 0");
  mpq_class n1 = 1 + r * r * r * r;
  mpq_class rinv = mpq_class(1) / r;
  mpq_class n2 = 1 + rinv * rinv * rinv * rinv;
  const Field* F = tower_for({n1, n2}, false);
  if (tower) *tower = F->tag();
  FieldElem one = F->one(), z = F->zero();
  ProjMat k1 = gen_ke(F->from_rational(r));
  ProjMat k2 = gen_ke(F->from_rational(rinv));
  LMat kinf = LMat::identity(3, LaurentPoly::one(F));
  kinf.at(1, 1) = -LaurentPoly::t(F);
  FMat neg = mat2(F, -one, z, z, -one);
  FMat rot = mat2(F, z, one, -one, z);
  ProjMat lhs = k1 * gen_oe(neg) * k2;
  ProjMat rhs = gen_oe(rot) * ProjMat(kinf).inv() * gen_oe(rot);
  return lhs == rhs;
}

bool verify_rel20(const mpq_class& r1, const mpq_class& r2, std::string* tower) {
  if (r1 <= 0 || r2 <= 0 || r1 * r2 <= 1) throw Error("rel20 needs r1, r2 > 0 and r1 r2 > 1");
  mpq_class r3 = (r1 + r2) / (r1 * r2 - 1);
  std::vector<mpq_class> rads{r1, r2, r3,
                              1 + r1 * r1, 1 + r2 * r2, 1 + r3 * r3,
                              mpq_class(1) / (r1 * r2), 1 - mpq_class(1) / (r1 * r2),
                              (r2 - 1 / r1) / (r1 + r2), (r1 + 1 / r1) / (r1 + r2),
                              (r1 - 1 / r2) / (r1 + r2), (r2 + 1 / r2) / (r1 + r2)};
  std::vector<mpq_class> positive;
  for (const auto& m : rads)
    if (m > 0) positive.push_back(m);
  const Field* F = tower_for(positive, false);
  if (tower) *tower = F->tag();
  ProjMat ka = gen_ke(fsqrt(F, r1));
  ProjMat kb = gen_ke(fsqrt(F, r2));
  ProjMat kc = gen_ke(fsqrt(F, r3));
  FieldElem s_inv = fsqrt(F, mpq_class(1) / (r1 * r2));
  FieldElem s_com = fsqrt(F, 1 - mpq_class(1) / (r1 * r2));
  FMat o1 = mat2(F, -s_inv, -s_com, s_com, -s_inv);
  FieldElem a21 = fsqrt(F, (r2 - 1 / r1) / (r1 + r2));
  FieldElem a22 = fsqrt(F, (r1 + 1 / r1) / (r1 + r2));
  FMat o2 = mat2(F, -a21, a22, -a22, -a21);
  FieldElem a31 = fsqrt(F, (r1 - 1 / r2) / (r1 + r2));
  FieldElem a32 = fsqrt(F, (r2 + 1 / r2) / (r1 + r2));
  FMat o3 = mat2(F, -a31, a32, -a32, -a31);
  ProjMat lhs = ka * gen_oe(o1) * kb;
  ProjMat rhs = gen_oe(o2) * kc.inv() * gen_oe(o3);
  return lhs == rhs;
}

namespace {

struct STWord {
  const char* text;  // letters S/T with exponents
};

// the nine subgroup generators as words in S', T'
const char* kAWordsST[9] = {
    "S^2 T^-2",        "S T^3 S^-1 T^-1", "S T S T^-1",
    "T^2 S T S^-1 T^-1", "T^4",           "T^3 S T^-1 S^-1",
    "T S T^-1 S",      "T S T S^-1",      "T S^2 T^-3",
};

// the same generators over d1, d2, g1..g4
const char* kAWordsDG[9] = {
    "d1^3 d2^-3 g4^2 g1^-2",
    "d1 d2^-1 g3^2 d1 g2^2 d2^-1 g3^-2 d1 d2^-1 g1^-2",
    "d1 g3^2 d1^-1 g1^-2",
    "g1^2 g4^-2 d2^-3 g3^-2 d1 g1^-2",
    "g1^2 d1^-1 g4^-2 d2^-1 g1^-2 d1 g4^2 d2",
    "g1^2 d1^-1 g4^-2 d2 g1^-2 d1^-1 g3^-2 d1^-1",
    "d2^2 g1^2 d1^-1 g3^2 d1",
    "d2 g1^2 d1^-3 g2^-2 d2^2",
    "d2^3 g1^2 d1^-2 g1^2 d1 g4^2 g1^-2",
};

std::vector<std::pair<std::string, long>> parse_word_text(const std::string& text) {
  std::vector<std::pair<std::string, long>> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    long e = 1;
    auto caret = tok.find('^');
    std::string head = tok;
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      e = std::stol(tok.substr(caret + 1));
    }
    out.push_back({head, e});
  }
  return out;
}

NamedGen named_from_string(const std::string& s) {
  if (s == "d1") return NamedGen::D1;
  if (s == "d2") return NamedGen::D2;
  if (s == "g1") return NamedGen::G1;
  if (s == "g2") return NamedGen::G2;
  if (s == "g3") return NamedGen::G3;
  if (s == "g4") return NamedGen::G4;
  throw Error("unknown generator name: " + s);
}

}  // namespace

ProjMat a_generator(int j, const Field* F) {
  if (j < 1 || j > 9) throw Error("generator index out of range");
  ProjMat sp(mat_embed(mat_Sp(Field::rational()), F));
  ProjMat tp(mat_embed(mat_Tp(Field::rational()), F));
  ProjMat acc = ProjMat::identity(3, F);
  for (const auto& [name, e] : parse_word_text(kAWordsST[j - 1])) {
    if (name == "S")
      acc = acc * sp.pow(e);
    else if (name == "T")
      acc = acc * tp.pow(e);
    else
      throw Error("bad letter in generator word");
  }
  return acc;
}

std::vector<std::pair<NamedGen, long>> a_word_dg(int j) {
  if (j < 1 || j > 9) throw Error("generator index out of range");
  std::vector<std::pair<NamedGen, long>> out;
  for (const auto& [name, e] : parse_word_text(kAWordsDG[j - 1]))
    out.push_back({named_from_string(name), e});
  return out;
}

ProjMat a_generator_dg(int j, const Field* F) {
  ProjMat acc = ProjMat::identity(3, F);
  for (const auto& [g, e] : a_word_dg(j)) acc = acc * named_gen(g, F).pow(e);
  return acc;
}

bool verify_eq21(int j) {
  const Field* F = Field::gaussian();
  return a_generator(j, F) == a_generator_dg(j, F);
}

bool verify_lemma47() {
  const Field* F = Field::gaussian();
  ProjMat d1 = named_gen(NamedGen::D1, F), d2 = named_gen(NamedGen::D2, F);
  ProjMat g1 = named_gen(NamedGen::G1, F), g2 = named_gen(NamedGen::G2, F);
  ProjMat g3 = named_gen(NamedGen::G3, F), g4 = named_gen(NamedGen::G4, F);
  std::vector<ProjMat> words{d1,
                             d2,
                             d1.inv() * d2.inv(),
                             g1,
                             g2,
                             g3,
                             g4,
                             d2.inv() * g1.inv(),
                             d2.inv() * g3.inv(),
                             d1.inv() * g2.inv(),
                             d1.inv() * g4.inv()};
  std::vector<LatticeClass> classes;
  for (const auto& w : words)
    classes.push_back(LatticeClass::canonical(to_ratfunc(w.rep())));
  RMat id = to_ratfunc(LMat::identity(3, LaurentPoly::one(F)));
  LatticeClass idc = LatticeClass::canonical(id);
  for (std::size_t a = 0; a < classes.size(); ++a) {
    if (classes[a].vertex_type() != 1) return false;
    if (!adjacent(idc, classes[a])) return false;
    if (classes[a] == idc) return false;
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      if (classes[a] == classes[b]) return false;
  }
  return true;
}

bool verify_phi_values() {
  const Field* F = Field::gaussian();
  FieldElem i = F->imaginary_unit(), z = F->zero();
  FieldElem half = F->from_rational(mpq_class(1, 2));
  auto expect = [&](NamedGen g, const FieldElem& a, const FieldElem& b) {
    auto [x, y] = phi_map(named_gen(g, F));
    return x == a && y == b;
  };
  return expect(NamedGen::G1, half + half * i, z) &&
         expect(NamedGen::G2, z, -half - half * i) &&
         expect(NamedGen::G3, half - half * i, z) &&
         expect(NamedGen::G4, z, half - half * i) &&
         expect(NamedGen::D1, z, z) && expect(NamedGen::D2, z, z);
}

bool verify_eq22_grid() {
  const Field* F = Field::gaussian();
  FieldElem i = F->imaginary_unit(), z = F->zero(), one = F->one();
  std::vector<FieldElem> units{one, -one, i, -i};
  std::vector<FMat> sus;
  for (const auto& u : units) {
    sus.push_back(mat2(F, u, z, z, u.conj()));          // a1 = u, a2 = 0
    sus.push_back(mat2(F, z, u, -u.conj(), z));         // a1 = 0, a2 = u
  }
  for (long r = 1; r <= 3; ++r) {
    FieldElem rf = F->from_long(r);
    FieldElem scale = rf * (rf * rf + i) / (rf.pow(4) + one);
    for (const auto& a : sus) {
      ProjMat w = gen_uu(a) * gen_uk(mpq_class(r), F) * gen_uu(a).inv();
      auto [x, y] = phi_map(w);
      FieldElem a1 = a.at(0, 0), a2 = a.at(0, 1);
      if (!(x == a1.conj() * scale) || !(y == -(a2 * scale))) return false;
    }
  }
  return true;
}

bool verify_section4(const std::string& id,
                     const std::map<std::string, mpq_class>& params) {
  auto get = [&](const char* k, const mpq_class& dflt) {
    auto it = params.find(k);
    return it == params.end() ? dflt : it->second;
  };
  if (id == "lemma43") return verify_lemma43(get("r", 2));
  if (id == "rel18") return verify_rel18();
  if (id == "rel19") return verify_rel19(get("r", 2));
  if (id == "rel20") return verify_rel20(get("r1", 2), get("r2", 1));
  if (id == "eq21") {
    for (int j = 1; j <= 9; ++j)
      if (!verify_eq21(j)) return false;
    return true;
  }
  if (id == "lemma47") return verify_lemma47();
  if (id == "phi") return verify_phi_values();
  if (id == "eq22") return verify_eq22_grid();
  throw Error("unknown verification id: " + id);
}

// ---- exploration ----------------------------------------------------------

SubcomplexReport explore(const std::vector<ProjMat>& gens, int radius,
                         std::size_t max_vertices) {
  if (radius < 0) throw Error("radius must be >= 0");
  SubcomplexReport rep;
  rep.radius = radius;
  if (gens.empty() && radius > 0) radius = 0;
  const Field* F = gens.empty() ? Field::gaussian() : gens[0].field();
  std::vector<ProjMat> step;
  for (const auto& g : gens) {
    step.push_back(g);
    step.push_back(g.inv());
  }
  struct Node {
    ProjMat elem;
    LatticeClass cls;
    int dist;
  };
  std::vector<Node> nodes;
  std::map<std::string, std::size_t> seen;
  ProjMat id = ProjMat::identity(3, F);
  LatticeClass idc = LatticeClass::canonical(to_ratfunc(id.rep()));
  nodes.push_back({id, idc, 0});
  seen[idc.key()] = 0;
  std::size_t frontier = 0;
  while (frontier < nodes.size()) {
    Node cur = nodes[frontier++];
    if (cur.dist >= radius) continue;
    for (const auto& g : step) {
      if (nodes.size() >= max_vertices) {
        rep.budget_exceeded = true;
        break;
      }
      ProjMat nxt = cur.elem * g;
      LatticeClass cls = LatticeClass::canonical(to_ratfunc(nxt.rep()));
      auto it = seen.find(cls.key());
      if (it != seen.end()) continue;
      seen[cls.key()] = nodes.size();
      nodes.push_back({nxt, cls, cur.dist + 1});
    }
    if (rep.budget_exceeded) break;
  }
  for (const auto& n : nodes) {
    rep.vertices.push_back({n.cls.key(), n.cls.vertex_type(), n.dist});
    rep.type_counts[n.cls.vertex_type()]++;
  }
  // edges and the link of the identity class
  std::vector<std::vector<bool>> adj(nodes.size(), std::vector<bool>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (adjacent(nodes[a].cls, nodes[b].cls)) {
        adj[a][b] = adj[b][a] = true;
        rep.edges.push_back({a, b});
        if (a == 0) rep.link_of_identity.push_back(b);
      }
    }
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (!adj[a][b]) continue;
      for (std::size_t c = b + 1; c < nodes.size(); ++c)
        if (adj[a][c] && adj[b][c]) rep.triangle_count++;
    }
  return rep;
}

}  // namespace bforge
