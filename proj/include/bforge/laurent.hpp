#ifndef BFORGE_LAURENT_HPP
#define BFORGE_LAURENT_HPP

#include <map>
#include <string>

#include "bforge/field.hpp"

namespace bforge {

/// Sparse Laurent polynomial: exponent -> nonzero coefficient. The bar
/// involution inverts t and conjugates coefficients.
class LaurentPoly {
 public:
  LaurentPoly() : F_(Field::rational()) {}
  explicit LaurentPoly(const Field* F) : F_(F) {}

  static LaurentPoly constant(const FieldElem& c);
  static LaurentPoly t(const Field* F, long k = 1);
  static LaurentPoly monomial(const FieldElem& c, long e);
  static LaurentPoly one(const Field* F) { return constant(F->one()); }
  static LaurentPoly from_long(const Field* F, long v) {
    return constant(F->from_long(v));
  }
  /// t^-1 + t
  static LaurentPoly phi(const Field* F);

  const Field* field() const { return F_; }
  bool is_zero() const { return coef_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  long min_deg() const;  // error on zero
  long max_deg() const;
  long span() const { return is_zero() ? 0 : max_deg() - min_deg(); }
  const std::map<long, FieldElem>& terms() const { return coef_; }
  FieldElem coeff(long e) const;
  FieldElem leading() const;   // coefficient at max_deg
  FieldElem constant_part() const { return coeff(0); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const FieldElem& c) const;
  LaurentPoly shifted(long k) const;  // * t^k
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly bar() const;
  FieldElem eval(const FieldElem& x) const;  // error on x == 0
  LaurentPoly pow(long e) const;             // e < 0 requires a unit
  LaurentPoly subst(const LaurentPoly& g) const;  // composition, this(g)

  bool is_unit() const;  // c * t^k with invertible c
  LaurentPoly unit_inv() const;
  bool is_integral() const;  // every coefficient integral

  /// true iff all exponents >= 0
  bool is_polynomial() const { return is_zero() || min_deg() >= 0; }

  FieldElem zero_like() const { return F_->zero(); }
  LaurentPoly clone_zero() const { return LaurentPoly(F_); }

  std::string str() const;
  static LaurentPoly parse(const std::string& text, const Field* F);

  LaurentPoly embedded_in(const Field* bigger) const;
  LaurentPoly coeff_map(const Field* target) const;  // reduce coeffs into target

 private:
  void set(long e, const FieldElem& c);
  const Field* F_;
  std::map<long, FieldElem> coef_;
};

inline LaurentPoly operator*(const FieldElem& c, const LaurentPoly& p) { return p * c; }

// polynomial helpers (operands must satisfy is_polynomial())
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                const LaurentPoly& b);
LaurentPoly poly_gcd_monic(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_lcm_monic(const LaurentPoly& a, const LaurentPoly& b);
bool poly_divides(const LaurentPoly& d, const LaurentPoly& a);

}  // namespace bforge

#endif
