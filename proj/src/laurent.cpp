#include "bforge/laurent.hpp"

#include <cctype>
#include <sstream>

namespace bforge {

void LaurentPoly::set(long e, const FieldElem& c) {
  if (c.is_zero())
    coef_.erase(e);
  else
    coef_[e] = c;
}

LaurentPoly LaurentPoly::constant(const FieldElem& c) {
  LaurentPoly p(c.field());
  p.set(0, c);
  return p;
}

LaurentPoly LaurentPoly::t(const Field* F, long k) {
  LaurentPoly p(F);
  p.set(k, F->one());
  return p;
}

LaurentPoly LaurentPoly::monomial(const FieldElem& c, long e) {
  LaurentPoly p(c.field());
  p.set(e, c);
  return p;
}

LaurentPoly LaurentPoly::phi(const Field* F) {
  LaurentPoly p(F);
  p.set(-1, F->one());
  p.set(1, F->one());
  return p;
}

bool LaurentPoly::is_constant() const {
  return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == 0);
}

bool LaurentPoly::is_one() const {
  return coef_.size() == 1 && coef_.begin()->first == 0 && coef_.begin()->second.is_one();
}

long LaurentPoly::min_deg() const {
  if (coef_.empty()) throw Error("degree of zero polynomial");
  return coef_.begin()->first;
}

long LaurentPoly::max_deg() const {
  if (coef_.empty()) throw Error("degree of zero polynomial");
  return coef_.rbegin()->first;
}

FieldElem LaurentPoly::coeff(long e) const {
  auto it = coef_.find(e);
  return it == coef_.end() ? F_->zero() : it->second;
}

FieldElem LaurentPoly::leading() const {
  if (coef_.empty()) throw Error("leading coefficient of zero");
  return coef_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (F_ != o.F_) throw Error("field mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coef_) {
    auto it = r.coef_.find(e);
    if (it == r.coef_.end())
      r.coef_[e] = c;
    else {
      FieldElem s = it->second + c;
      if (s.is_zero())
        r.coef_.erase(it);
      else
        it->second = s;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(F_);
  for (const auto& [e, c] : coef_) r.coef_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (F_ != o.F_) throw Error("field mismatch");
  LaurentPoly r(F_);
  for (const auto& [e1, c1] : coef_)
    for (const auto& [e2, c2] : o.coef_) {
      long e = e1 + e2;
      FieldElem prod = c1 * c2;
      auto it = r.coef_.find(e);
      if (it == r.coef_.end()) {
        if (!prod.is_zero()) r.coef_[e] = prod;
      } else {
        FieldElem s = it->second + prod;
        if (s.is_zero())
          r.coef_.erase(it);
        else
          it->second = s;
      }
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const FieldElem& c) const {
  LaurentPoly r(F_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : coef_) {
    FieldElem prod = a * c;
    if (!prod.is_zero()) r.coef_[e] = prod;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r(F_);
  for (const auto& [e, c] : coef_) r.coef_[e + k] = c;
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return F_ == o.F_ && coef_ == o.coef_;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r(F_);
  for (const auto& [e, c] : coef_) r.coef_[-e] = c.conj();
  return r;
}

FieldElem LaurentPoly::eval(const FieldElem& x) const {
  if (x.is_zero()) throw Error("evaluation at zero");
  FieldElem acc = F_->zero();
  for (const auto& [e, c] : coef_) acc = acc + c * x.pow(e);
  return acc;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (!is_unit()) throw Error("negative power of a non-unit");
    return unit_inv().pow(-e);
  }
  LaurentPoly base = *this;
  LaurentPoly r = one(F_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::subst(const LaurentPoly& g) const {
  LaurentPoly acc(F_);
  for (const auto& [e, c] : coef_) acc = acc + g.pow(e) * c;
  return acc;
}

bool LaurentPoly::is_unit() const { return coef_.size() == 1; }

LaurentPoly LaurentPoly::unit_inv() const {
  if (!is_unit()) throw Error("not a unit");
  auto [e, c] = *coef_.begin();
  return monomial(c.inv(), -e);
}

bool LaurentPoly::is_integral() const {
  for (const auto& [e, c] : coef_)
    if (!c.is_integral()) return false;
  return true;
}

LaurentPoly LaurentPoly::embedded_in(const Field* bigger) const {
  LaurentPoly r(bigger);
  for (const auto& [e, c] : coef_) r.coef_[e] = c.embedded_in(bigger);
  return r;
}

LaurentPoly LaurentPoly::coeff_map(const Field* target) const {
  if (F_ == target) return *this;
  LaurentPoly r(target);
  for (const auto& [e, c] : coef_) {
    auto q = c.as_rational();
    if (!q) throw Error("coefficient is not rational");
    FieldElem m = target->from_rational(*q);
    if (!m.is_zero()) r.coef_[e] = m;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (coef_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find('(') == std::string::npos;
    if (!first) {
      s += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (e == 0) {
      s += cs;
      continue;
    }
    if (cs == "1") {
      s += "t";
    } else if (cs == "-1") {
      s += "-t";
    } else {
      s += cs + "*t";
    }
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(const std::string& text, const Field* F) {
  LaurentPoly acc(F);
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw Error("empty polynomial text");
  std::size_t pos = 0;
  auto term_end = [&](std::size_t from) {
    int depth = 0;
    std::size_t j = from;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-') && j > from) {
        // not a sign inside an exponent like t^-2
        if (s[j - 1] == '^') continue;
        break;
      }
    }
    return j;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t end = term_end(pos);
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw Error("bad polynomial text: " + text);
    // term: [coeff '*'] 't' ['^' int]  |  coeff
    FieldElem coeff = F->one();
    long expo = 0;
    std::size_t tpos = std::string::npos;
    {
      int depth = 0;
      for (std::size_t j = 0; j < term.size(); ++j) {
        if (term[j] == '(') ++depth;
        if (term[j] == ')') --depth;
        if (depth == 0 && term[j] == 't') {
          tpos = j;
          break;
        }
      }
    }
    if (tpos == std::string::npos) {
      coeff = F->parse(term);
    } else {
      std::string chead = term.substr(0, tpos);
      if (!chead.empty()) {
        if (chead.back() == '*') chead.pop_back();
        if (!chead.empty()) coeff = F->parse(chead);
      }
      std::string tail = term.substr(tpos + 1);
      if (tail.empty()) {
        expo = 1;
      } else if (tail[0] == '^') {
        expo = std::stol(tail.substr(1));
      } else {
        throw Error("bad term: " + term);
      }
    }
    if (sign < 0) coeff = -coeff;
    acc = acc + monomial(coeff, expo);
  }
  return acc;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                const LaurentPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial()) throw Error("divmod needs polynomials");
  if (b.is_zero()) throw Error("polynomial division by zero");
  const Field* F = a.field();
  LaurentPoly q(F), r = a;
  long db = b.max_deg();
  FieldElem lb = b.leading();
  while (!r.is_zero() && r.max_deg() >= db) {
    long e = r.max_deg() - db;
    FieldElem c = r.leading() / lb;
    LaurentPoly m = LaurentPoly::monomial(c, e);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

LaurentPoly poly_gcd_monic(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = poly_divmod(x, y);
    (void)q;
    x = y;
    // normalize remainders monic to control coefficient growth
    if (!r.is_zero()) r = r * r.leading().inv();
    y = r;
  }
  if (x.is_zero()) return x;
  return x * x.leading().inv();
}

LaurentPoly poly_lcm_monic(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error("lcm with zero");
  LaurentPoly g = poly_gcd_monic(a, b);
  auto [q, r] = poly_divmod(a * b, g);
  if (!r.is_zero()) throw Error("internal: lcm division not exact");
  return q * q.leading().inv();
}

bool poly_divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  auto [q, r] = poly_divmod(a, d);
  (void)q;
  return r.is_zero();
}

}  // namespace bforge
