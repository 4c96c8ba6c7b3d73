#include "bforge/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace bforge {

namespace {

std::mutex g_reg_mutex;

struct FieldKey {
  FieldKind kind;
  unsigned long p;
  bool with_i;
  std::vector<unsigned long> primes;
  bool operator<(const FieldKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (p != o.p) return p < o.p;
    if (with_i != o.with_i) return with_i < o.with_i;
    return primes < o.primes;
  }
};

const Field* intern(FieldKind k, unsigned long p, bool wi,
                    std::vector<unsigned long> primes) {
  static std::map<FieldKey, std::unique_ptr<Field>>* reg =
      new std::map<FieldKey, std::unique_ptr<Field>>();
  std::lock_guard<std::mutex> lock(g_reg_mutex);
  FieldKey key{k, p, wi, primes};
  auto it = reg->find(key);
  if (it != reg->end()) return it->second.get();
  auto f = std::make_unique<Field>(k, p, wi, std::move(primes));
  const Field* ptr = f.get();
  (*reg)[key] = std::move(f);
  return ptr;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return (a * b) % p;  // p < 2^31 so a*b < 2^62
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
  a %= p;
  if (a == 0) throw Error("division by zero in F_p");
  return powmod(a, p - 2, p);
}

mpq_class rat_from_string(const std::string& s) {
  if (s.empty()) throw Error("bad rational literal (empty)");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime_ul(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const Field* Field::rational() {
  static const Field* f = intern(FieldKind::Rational, 0, false, {});
  return f;
}

const Field* Field::gaussian() {
  static const Field* f = intern(FieldKind::Gaussian, 0, true, {});
  return f;
}

const Field* Field::prime(unsigned long p) {
  if (!is_prime_ul(p)) throw Error("PrimeField modulus must be prime");
  if (p >= (1ul << 31)) throw Error("PrimeField modulus too large");
  return intern(FieldKind::Prime, p, false, {});
}

const Field* Field::multiquad(std::vector<unsigned long> primes, bool with_i) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (unsigned long p : primes)
    if (!is_prime_ul(p)) throw Error("MultiQuad radicand must be prime");
  if (primes.size() > 6) throw Error("radical tower overflow (k > 6)");
  if (primes.empty()) return with_i ? gaussian() : rational();
  return intern(FieldKind::MultiQuad, 0, with_i, std::move(primes));
}

const Field* Field::from_tag(const std::string& tag) {
  if (tag == "q") return rational();
  if (tag == "qi") return gaussian();
  if (tag.rfind("fp:", 0) == 0) return prime(std::stoul(tag.substr(3)));
  bool wi = false;
  std::string rest;
  if (tag.rfind("mqi:", 0) == 0) {
    wi = true;
    rest = tag.substr(4);
  } else if (tag.rfind("mq:", 0) == 0) {
    rest = tag.substr(3);
  } else {
    throw Error("unknown field tag: " + tag);
  }
  std::vector<unsigned long> primes;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) primes.push_back(std::stoul(item));
  return multiquad(std::move(primes), wi);
}

std::size_t Field::coord_count() const {
  return (has_i_ ? 2u : 1u) << primes_.size();
}

std::string Field::tag() const {
  switch (kind_) {
    case FieldKind::Rational: return "q";
    case FieldKind::Gaussian: return "qi";
    case FieldKind::Prime: return "fp:" + std::to_string(p_);
    case FieldKind::MultiQuad: {
      std::string s = has_i_ ? "mqi:" : "mq:";
      for (std::size_t j = 0; j < primes_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(primes_[j]);
      }
      return s;
    }
  }
  throw Error("unreachable");
}

FieldElem Field::zero() const { return FieldElem(this); }

FieldElem Field::one() const { return from_long(1); }

FieldElem Field::from_rational(const mpq_class& q) const {
  mpq_class qc = q;
  qc.canonicalize();
  FieldElem e(this);
  if (kind_ == FieldKind::Prime) {
    mpz_class pz(static_cast<long>(p_));
    mpz_class nr = qc.get_num() % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = qc.get_den() % pz;
    if (dr == 0) throw Error("rational with denominator divisible by p");
    e.res_ = mulmod(nr.get_ui(), invmod(dr.get_ui(), p_), p_);
  } else {
    e.c_[0] = qc;
  }
  return e;
}

FieldElem Field::from_long(long v) const { return from_rational(mpq_class(v)); }

FieldElem Field::imaginary_unit() const {
  if (!has_i_) throw Error("field has no imaginary unit");
  FieldElem e(this);
  e.c_[1] = 1;
  return e;
}

FieldElem Field::radical(unsigned long p) const {
  auto it = std::find(primes_.begin(), primes_.end(), p);
  if (it == primes_.end())
    throw Error("radical not adjoined: sqrt of " + std::to_string(p));
  std::size_t j = static_cast<std::size_t>(it - primes_.begin());
  FieldElem e(this);
  std::size_t istride = has_i_ ? 2 : 1;
  e.c_[(std::size_t(1) << j) * istride] = 1;
  return e;
}

std::pair<mpq_class, unsigned long> squarefree_split(const mpq_class& m) {
  if (m <= 0) throw Error("sqrt of non-positive rational");
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class n = m.get_num() * m.get_den();
  mpq_class scale(1, m.get_den());
  unsigned long d = 1;
  mpz_class rest = n;
  mpz_class sq;
  for (mpz_class f = 2; f * f <= rest; ++f) {
    if (f > 2000000) throw Error("radicand too large to factor");
    unsigned e = 0;
    while (rest % f == 0) {
      rest /= f;
      ++e;
    }
    if (e) {
      mpz_pow_ui(sq.get_mpz_t(), f.get_mpz_t(), e / 2);
      scale *= mpq_class(sq);
      if (e & 1) d *= f.get_ui();
    }
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) throw Error("radicand prime too large");
    d *= rest.get_ui();
  }
  return {scale, d};
}

std::optional<FieldElem> Field::sqrt_rational(const mpq_class& m) const {
  if (kind_ == FieldKind::Prime) return std::nullopt;
  auto [scale, d] = squarefree_split(m);
  if (d == 1) return from_rational(scale);
  if (kind_ != FieldKind::MultiQuad) return std::nullopt;
  std::size_t mask = 0;
  unsigned long rest = d;
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    if (rest % primes_[j] == 0) {
      rest /= primes_[j];
      mask |= (std::size_t(1) << j);
    }
  }
  if (rest != 1) return std::nullopt;
  FieldElem e(this);
  std::size_t istride = has_i_ ? 2 : 1;
  e.c_[mask * istride] = scale;
  return e;
}

const Field* Field::with_sqrt(const mpq_class& m) const {
  if (kind_ == FieldKind::Prime) throw Error("cannot adjoin radicals to F_p");
  auto [scale, d] = squarefree_split(m);
  (void)scale;
  std::vector<unsigned long> pr = primes_;
  unsigned long rest = d;
  for (unsigned long f = 2; f * f <= rest; ++f)
    while (rest % f == 0) {
      pr.push_back(f);
      rest /= f;
    }
  if (rest > 1) pr.push_back(rest);
  return multiquad(std::move(pr), has_i_);
}

const Field* Field::with_i() const {
  if (kind_ == FieldKind::Prime) throw Error("cannot adjoin i to F_p here");
  if (has_i_) return this;
  return multiquad(primes_, true);
}

bool Field::contains(const Field* sub) const {
  if (sub == this) return true;
  if (kind_ == FieldKind::Prime || sub->kind_ == FieldKind::Prime) return false;
  if (sub->has_i_ && !has_i_) return false;
  for (unsigned long p : sub->primes_)
    if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) return false;
  return true;
}

bool FieldElem::is_zero() const {
  if (F_->kind() == FieldKind::Prime) return res_ == 0;
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (F_->kind() == FieldKind::Prime) return res_ == 1 % F_->characteristic();
  if (c_[0] != 1) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  FieldElem r(F_);
  if (F_->kind() == FieldKind::Prime) {
    r.res_ = (res_ + o.res_) % F_->characteristic();
  } else {
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] + o.c_[j];
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
  FieldElem r(F_);
  if (F_->kind() == FieldKind::Prime) {
    unsigned long p = F_->characteristic();
    r.res_ = (p - res_) % p;
  } else {
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
  }
  return r;
}

namespace {

// coordinate-level product over the basis {1,i?} x {radical subset products}
void coord_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
               std::vector<mpq_class>& out, const std::vector<unsigned long>& primes,
               std::size_t k, bool with_i) {
  const std::size_t istride = with_i ? 2 : 1;
  const std::size_t nsub = std::size_t(1) << k;
  std::fill(out.begin(), out.end(), mpq_class(0));
  for (std::size_t S = 0; S < nsub; ++S)
    for (std::size_t ia = 0; ia < istride; ++ia) {
      const mpq_class& x = a[S * istride + ia];
      if (x == 0) continue;
      for (std::size_t T = 0; T < nsub; ++T)
        for (std::size_t ib = 0; ib < istride; ++ib) {
          const mpq_class& y = b[T * istride + ib];
          if (y == 0) continue;
          mpq_class prod = x * y;
          std::size_t inter = S & T;
          for (std::size_t j = 0; j < k; ++j)
            if (inter & (std::size_t(1) << j)) prod *= (long)primes[j];
          std::size_t U = S ^ T;
          std::size_t im = ia + ib;  // i^2 = -1
          if (im == 2)
            out[U * istride] -= prod;
          else
            out[U * istride + im] += prod;
        }
    }
}

// inverse over the first k radicals; peels the top radical, then i
std::vector<mpq_class> inv_coords(const std::vector<mpq_class>& v,
                                  const std::vector<unsigned long>& primes,
                                  std::size_t k, bool with_i) {
  const std::size_t istride = with_i ? 2 : 1;
  if (k == 0) {
    if (with_i) {
      mpq_class u = v[0], w = v[1];
      mpq_class n = u * u + w * w;
      if (n == 0) throw Error("division by zero");
      return {u / n, -w / n};
    }
    if (v[0] == 0) throw Error("division by zero");
    return {mpq_class(1) / v[0]};
  }
  const std::size_t half = (std::size_t(1) << (k - 1)) * istride;
  std::vector<mpq_class> a(v.begin(), v.begin() + half);
  std::vector<mpq_class> b(v.begin() + half, v.end());
  // v = a + b*sqrt(p); 1/v = (a - b*sqrt(p)) / (a^2 - p*b^2)
  std::vector<mpq_class> a2(half), b2(half), ra(half), rb(half);
  coord_mul(a, a, a2, primes, k - 1, with_i);
  coord_mul(b, b, b2, primes, k - 1, with_i);
  for (std::size_t j = 0; j < half; ++j) a2[j] -= b2[j] * (long)primes[k - 1];
  std::vector<mpq_class> ninv = inv_coords(a2, primes, k - 1, with_i);
  coord_mul(a, ninv, ra, primes, k - 1, with_i);
  coord_mul(b, ninv, rb, primes, k - 1, with_i);
  std::vector<mpq_class> out(v.size());
  for (std::size_t j = 0; j < half; ++j) {
    out[j] = ra[j];
    out[half + j] = -rb[j];
  }
  return out;
}

}  // namespace

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  FieldElem r(F_);
  if (F_->kind() == FieldKind::Prime) {
    r.res_ = mulmod(res_, o.res_, F_->characteristic());
    return r;
  }
  coord_mul(c_, o.c_, r.c_, F_->radicands(), F_->radicands().size(), F_->has_i());
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error("division by zero");
  FieldElem r(F_);
  if (F_->kind() == FieldKind::Prime) {
    r.res_ = invmod(res_, F_->characteristic());
    return r;
  }
  r.c_ = inv_coords(c_, F_->radicands(), F_->radicands().size(), F_->has_i());
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(long e) const {
  FieldElem base = e < 0 ? inv() : *this;
  unsigned long k =
      e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  FieldElem r = F_->one();
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

FieldElem FieldElem::conj() const {
  FieldElem r = *this;
  if (F_->kind() == FieldKind::Prime || !F_->has_i()) return r;
  for (std::size_t S = 0; 2 * S < r.c_.size(); ++S) r.c_[2 * S + 1] = -r.c_[2 * S + 1];
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (F_ != o.F_) return false;
  if (F_->kind() == FieldKind::Prime) return res_ == o.res_;
  return c_ == o.c_;
}

std::optional<mpq_class> FieldElem::as_rational() const {
  if (F_->kind() == FieldKind::Prime) return std::nullopt;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

std::optional<std::pair<mpq_class, mpq_class>> FieldElem::as_gaussian() const {
  if (F_->kind() == FieldKind::Prime) return std::nullopt;
  if (!F_->has_i()) {
    auto r = as_rational();
    if (!r) return std::nullopt;
    return std::make_pair(*r, mpq_class(0));
  }
  for (std::size_t j = 2; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return std::make_pair(c_[0], c_[1]);
}

unsigned long FieldElem::residue() const {
  if (F_->kind() != FieldKind::Prime) throw Error("residue() on non-prime field");
  return res_;
}

bool FieldElem::is_integral() const {
  if (F_->kind() == FieldKind::Prime) return true;
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

FieldElem FieldElem::embedded_in(const Field* bigger) const {
  if (bigger == F_) return *this;
  if (!bigger->contains(F_)) throw Error("not a subfield embedding");
  FieldElem r(bigger);
  const std::size_t src_istride = F_->has_i() ? 2 : 1;
  const std::size_t dst_istride = bigger->has_i() ? 2 : 1;
  const auto& sp = F_->radicands();
  const auto& dp = bigger->radicands();
  const std::size_t nsub = std::size_t(1) << sp.size();
  for (std::size_t S = 0; S < nsub; ++S) {
    std::size_t D = 0;
    for (std::size_t j = 0; j < sp.size(); ++j)
      if (S & (std::size_t(1) << j)) {
        auto it = std::find(dp.begin(), dp.end(), sp[j]);
        D |= (std::size_t(1) << (it - dp.begin()));
      }
    for (std::size_t ia = 0; ia < src_istride; ++ia)
      r.c_[D * dst_istride + ia] = c_[S * src_istride + ia];
  }
  return r;
}

namespace {

std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string FieldElem::str() const {
  if (F_->kind() == FieldKind::Prime) return std::to_string(res_);
  auto g = as_gaussian();
  if (g) {
    auto [re, im] = *g;
    if (im == 0) return rat_str(re);
    std::string s = "(" + rat_str(re);
    if (im > 0) s += "+";
    s += rat_str(im) + "i)";
    return s;
  }
  const std::size_t istride = F_->has_i() ? 2 : 1;
  const auto& primes = F_->radicands();
  std::string s = "(";
  bool first = true;
  for (std::size_t S = 0; S * istride < c_.size(); ++S)
    for (std::size_t im = 0; im < istride; ++im) {
      const mpq_class& q = c_[S * istride + im];
      if (q == 0) continue;
      std::string term = rat_str(q);
      if (im) term += "*i";
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (S & (std::size_t(1) << j)) term += "*s" + std::to_string(primes[j]);
      if (!first && term[0] != '-') s += "+";
      s += term;
      first = false;
    }
  if (first) s += "0";
  s += ")";
  return s;
}

FieldElem Field::parse(const std::string& text) const {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw Error("empty coefficient");
  if (kind_ == FieldKind::Prime) {
    mpz_class z(s);
    mpz_class pz(static_cast<long>(p_));
    mpz_class r = z % pz;
    if (r < 0) r += pz;
    return from_rational(mpq_class(r));
  }
  bool parenthesized = s.front() == '(' && s.back() == ')';
  std::string body = parenthesized ? s.substr(1, s.size() - 2) : s;
  if (body.empty()) throw Error("empty coefficient");

  auto parse_factor = [&](const std::string& f) -> FieldElem {
    if (f == "i") return imaginary_unit();
    if (f.size() > 1 && f[0] == 's' && std::isdigit((unsigned char)f[1]))
      return radical(std::stoul(f.substr(1)));
    if (f.back() == 'i') {
      std::string head = f.substr(0, f.size() - 1);
      if (head.empty()) return imaginary_unit();
      return from_rational(rat_from_string(head)) * imaginary_unit();
    }
    return from_rational(rat_from_string(f));
  };

  FieldElem acc = zero();
  std::size_t pos = 0;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+') {
      ++pos;
    } else if (body[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < body.size() && body[pos] != '+' && body[pos] != '-') ++pos;
    std::string term = body.substr(start, pos - start);
    if (term.empty()) throw Error("bad coefficient: " + text);
    FieldElem t = one();
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) t = t * parse_factor(factor);
    acc = sign < 0 ? acc - t : acc + t;
  }
  return acc;
}

}  // namespace bforge
