#ifndef BFORGE_RATFUNC_HPP
#define BFORGE_RATFUNC_HPP

#include "bforge/laurent.hpp"

namespace bforge {

/// Reduced fraction of polynomials over a field: gcd(num, den) = 1 and den
/// monic. Laurent polynomials embed with denominator a power of t.
class RatFunc {
 public:
  RatFunc() : num_(LaurentPoly(Field::rational())), den_(LaurentPoly::one(Field::rational())) {}
  explicit RatFunc(const Field* F)
      : num_(LaurentPoly(F)), den_(LaurentPoly::one(F)) {}
  RatFunc(LaurentPoly num, LaurentPoly den);  // normalizes

  static RatFunc zero(const Field* F) { return RatFunc(F); }
  static RatFunc one(const Field* F) {
    return RatFunc(LaurentPoly::one(F), LaurentPoly::one(F));
  }
  static RatFunc from_laurent(const LaurentPoly& f);
  static RatFunc t(const Field* F, long k = 1) {
    return from_laurent(LaurentPoly::t(F, k));
  }
  static RatFunc constant(const FieldElem& c) {
    return from_laurent(LaurentPoly::constant(c));
  }

  const Field* field() const { return num_.field(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(long e) const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc bar() const;
  FieldElem eval(const FieldElem& x) const;  // error if den(x) == 0

  /// denominator is t^k: the fraction is a Laurent polynomial
  bool is_laurent() const;
  LaurentPoly to_laurent() const;  // error if not Laurent
  /// denominator divides t^a * (1+t)^b (the tame denominators)
  bool denominator_smooth_1pt() const;

  RatFunc embedded_in(const Field* bigger) const;

  std::string str() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

/// valuation at infinity: deg(den) - deg(num); error on zero
long val_inf(const RatFunc& f);

}  // namespace bforge

#endif
