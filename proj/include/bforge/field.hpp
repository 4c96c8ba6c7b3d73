#ifndef BFORGE_FIELD_HPP
#define BFORGE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Gaussian, Prime, MultiQuad };

class FieldElem;

/// An exact coefficient field: Q, Q(i), F_p, or a real/gaussian multi-quadratic
/// tower Q(i?)(sqrt p_1, ..., sqrt p_k) with distinct prime radicands.
/// Instances are interned; compare descriptors by pointer.
class Field {
 public:
  static const Field* rational();
  static const Field* gaussian();
  static const Field* prime(unsigned long p);
  // radicand primes, sorted, distinct; k <= 6
  static const Field* multiquad(std::vector<unsigned long> primes, bool with_i);
  // tags: "q", "qi", "fp:5", "mq:2,17", "mqi:2,17"
  static const Field* from_tag(const std::string& tag);

  FieldKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool has_i() const { return has_i_; }
  const std::vector<unsigned long>& radicands() const { return primes_; }
  std::size_t coord_count() const;  // (has_i?2:1) << primes_.size()
  std::string tag() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_rational(const mpq_class& q) const;
  FieldElem from_long(long v) const;
  FieldElem imaginary_unit() const;        // error unless has_i
  FieldElem radical(unsigned long p) const;  // sqrt(p) for an adjoined prime

  // sqrt of a positive rational inside this field, if representable
  std::optional<FieldElem> sqrt_rational(const mpq_class& m) const;
  // minimal interned extension of this field containing sqrt(m), m > 0
  const Field* with_sqrt(const mpq_class& m) const;
  // this field extended with i
  const Field* with_i() const;
  bool contains(const Field* sub) const;

  FieldElem parse(const std::string& text) const;

  // construct through the interning factories above
  Field(FieldKind k, unsigned long p, bool wi, std::vector<unsigned long> pr)
      : kind_(k), p_(p), has_i_(wi), primes_(std::move(pr)) {}

 private:
  FieldKind kind_;
  unsigned long p_;   // prime modulus, 0 otherwise
  bool has_i_;
  std::vector<unsigned long> primes_;
  friend class FieldElem;
};

/// Immutable exact field element. For Prime fields a residue; otherwise a
/// coordinate vector over the basis {1,i?} x {products of adjoined radicals}.
class FieldElem {
 public:
  FieldElem() : F_(Field::rational()), c_(1) {}

  const Field* field() const { return F_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inv() const;
  FieldElem pow(long e) const;
  FieldElem conj() const;  // i -> -i; fixes radicals; identity on Q, F_p
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // the rational coordinate when the element lies in the prime field part
  std::optional<mpq_class> as_rational() const;
  // Gaussian parts (re, im) when the element has no radical coordinates
  std::optional<std::pair<mpq_class, mpq_class>> as_gaussian() const;
  unsigned long residue() const;  // Prime fields only

  // true when every coordinate is an integer (residues always qualify)
  bool is_integral() const;

  FieldElem embedded_in(const Field* bigger) const;

  std::string str() const;

  // scalar convenience for generic code
  FieldElem zero_like() const { return F_->zero(); }
  FieldElem one_like() const { return F_->one(); }

 private:
  friend class Field;
  explicit FieldElem(const Field* F) : F_(F) {
    if (F_->kind() == FieldKind::Prime)
      res_ = 0;
    else
      c_.assign(F_->coord_count(), mpq_class(0));
  }
  void check_same(const FieldElem& o) const {
    if (F_ != o.F_) throw Error("field mismatch");
  }
  const Field* F_;
  unsigned long res_ = 0;
  std::vector<mpq_class> c_;
};

// squarefree decomposition helper: m = (a/b)^2 * d with d squarefree positive
// returns (a/b, d); m must be a positive rational
std::pair<mpq_class, unsigned long> squarefree_split(const mpq_class& m);

bool is_prime_ul(unsigned long p);

}  // namespace bforge

#endif
