#include "bforge/ratfunc.hpp"

namespace bforge {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(num), den_(den) {
  if (num_.field() != den_.field()) throw Error("field mismatch");
  if (den_.is_zero()) throw Error("zero denominator");
  normalize();
}

RatFunc RatFunc::from_laurent(const LaurentPoly& f) {
  const Field* F = f.field();
  if (f.is_zero()) return RatFunc(F);
  long m = f.min_deg();
  RatFunc r(F);
  if (m >= 0) {
    r.num_ = f;
    r.den_ = LaurentPoly::one(F);
  } else {
    r.num_ = f.shifted(-m);
    r.den_ = LaurentPoly::t(F, -m);
  }
  return r;
}

void RatFunc::normalize() {
  const Field* F = num_.field();
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(F);
    return;
  }
  // clear t-negative exponents so both parts are polynomials
  long m = std::min(num_.min_deg(), den_.min_deg());
  if (m < 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  // strip common t powers
  long tcommon = std::min(num_.min_deg(), den_.min_deg());
  if (tcommon > 0) {
    num_ = num_.shifted(-tcommon);
    den_ = den_.shifted(-tcommon);
  }
  // fast path: denominator t^a (1+t)^b, common in the diagonalized picture
  LaurentPoly one_plus_t = LaurentPoly::one(F) + LaurentPoly::t(F);
  bool fast = true;
  {
    LaurentPoly d = den_;
    if (!d.is_zero() && d.min_deg() > 0) d = d.shifted(-d.min_deg());
    while (fast && !d.is_constant()) {
      auto [q, r] = poly_divmod(d, one_plus_t);
      if (r.is_zero())
        d = q;
      else
        fast = false;
    }
  }
  if (fast) {
    // only t and (1+t) can divide the denominator; shared t powers are gone,
    // so divide out shared (1+t) factors
    while (true) {
      auto [qd, rd] = poly_divmod(den_, one_plus_t);
      if (!rd.is_zero()) break;
      auto [qn, rn] = poly_divmod(num_, one_plus_t);
      if (!rn.is_zero()) break;
      den_ = qd;
      num_ = qn;
    }
  } else {
    LaurentPoly g = poly_gcd_monic(num_, den_);
    if (!g.is_one() && !g.is_constant()) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
  }
  // monic denominator
  FieldElem lc = den_.leading();
  if (!lc.is_one()) {
    FieldElem li = lc.inv();
    num_ = num_ * li;
    den_ = den_ * li;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error("division by zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  RatFunc base = e < 0 ? inv() : *this;
  unsigned long k =
      e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  RatFunc r = one(field());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

FieldElem RatFunc::eval(const FieldElem& x) const {
  FieldElem d = den_.eval(x);
  if (d.is_zero()) throw Error("pole at evaluation point");
  if (num_.is_zero()) return field()->zero();
  return num_.eval(x) / d;
}

bool RatFunc::is_laurent() const {
  return den_.is_unit();  // monic, so a unit denominator is exactly t^k
}

LaurentPoly RatFunc::to_laurent() const {
  if (num_.is_zero()) return LaurentPoly(field());
  if (!is_laurent()) throw Error("not a Laurent polynomial: " + str());
  return num_.shifted(-den_.min_deg());
}

bool RatFunc::denominator_smooth_1pt() const {
  const Field* F = field();
  LaurentPoly d = den_;
  if (d.is_zero()) return false;
  if (d.min_deg() > 0) d = d.shifted(-d.min_deg());
  LaurentPoly one_plus_t = LaurentPoly::one(F) + LaurentPoly::t(F);
  while (!d.is_constant()) {
    auto [q, r] = poly_divmod(d, one_plus_t);
    if (!r.is_zero()) return false;
    d = q;
  }
  return true;
}

RatFunc RatFunc::embedded_in(const Field* bigger) const {
  return RatFunc(num_.embedded_in(bigger), den_.embedded_in(bigger));
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

long val_inf(const RatFunc& f) {
  if (f.is_zero()) throw Error("valuation of zero");
  return f.den().max_deg() - f.num().max_deg();
}

}  // namespace bforge
