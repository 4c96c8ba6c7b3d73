#ifndef BFORGE_MATRIX_HPP
#define BFORGE_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "bforge/ratfunc.hpp"

namespace bforge {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<FieldElem> {
  static FieldElem zero(const FieldElem& proto) { return proto.field()->zero(); }
  static FieldElem one(const FieldElem& proto) { return proto.field()->one(); }
  static bool is_zero(const FieldElem& x) { return x.is_zero(); }
};

template <>
struct ScalarOps<LaurentPoly> {
  static LaurentPoly zero(const LaurentPoly& proto) {
    return LaurentPoly(proto.field());
  }
  static LaurentPoly one(const LaurentPoly& proto) {
    return LaurentPoly::one(proto.field());
  }
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
};

template <>
struct ScalarOps<RatFunc> {
  static RatFunc zero(const RatFunc& proto) { return RatFunc::zero(proto.field()); }
  static RatFunc one(const RatFunc& proto) { return RatFunc::one(proto.field()); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

/// Dense matrix over an exact scalar ring. Small sizes only; all arithmetic
/// is exact, inverses exist only where the scalars allow them.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c, const S& fill)
      : rows_(r), cols_(c), a_(r * c, fill) {}

  static Matrix identity(std::size_t n, const S& proto) {
    Matrix m(n, n, ScalarOps<S>::zero(proto));
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = ScalarOps<S>::one(proto);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  S& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const S& proto() const {
    if (a_.empty()) throw Error("empty matrix");
    return a_[0];
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] + o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    Matrix r(rows_, o.cols_, ScalarOps<S>::zero(proto()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& x = at(i, k);
        if (ScalarOps<S>::is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    return r;
  }

  Matrix operator*(const S& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix r(cols_, rows_, proto());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(proto()))> {
    using T = decltype(f(proto()));
    Matrix<T> r(rows_, cols_, f(proto()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!ScalarOps<S>::is_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (!square()) return false;
    return *this == identity(rows_, proto());
  }

  /// division-free determinant (expansion over column subsets)
  S det() const {
    if (!square()) throw Error("determinant of non-square matrix");
    const std::size_t n = rows_;
    std::map<std::size_t, S> memo;  // column mask -> minor det (rows = popcount)
    std::function<S(std::size_t)> go = [&](std::size_t mask) -> S {
      if (mask == 0) return ScalarOps<S>::one(proto());
      auto it = memo.find(mask);
      if (it != memo.end()) return it->second;
      std::size_t row = n;
      {
        std::size_t cnt = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (mask & (std::size_t(1) << j)) ++cnt;
        row = n - cnt;  // expand along the topmost unused row
      }
      S acc = ScalarOps<S>::zero(proto());
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (std::size_t(1) << j))) continue;
        const S& x = at(row, j);
        if (!ScalarOps<S>::is_zero(x)) {
          S sub = go(mask & ~(std::size_t(1) << j));
          S term = x * sub;
          acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
      }
      memo[mask] = acc;
      return acc;
    };
    return go((std::size_t(1) << n) - 1);
  }

  /// Gauss-Jordan inverse; requires scalar division (FieldElem, RatFunc)
  Matrix inverse() const
    requires requires(S a, S b) { a / b; }
  {
    if (!square()) throw Error("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n, proto());
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && ScalarOps<S>::is_zero(a.at(piv, col))) ++piv;
      if (piv == n) throw Error("matrix is singular");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      S d = a.at(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(col, j) = a.at(col, j) / d;
        inv.at(col, j) = inv.at(col, j) / d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        S f = a.at(i, col);
        if (ScalarOps<S>::is_zero(f)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          a.at(i, j) = a.at(i, j) - f * a.at(col, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  Matrix pow(long e) const {
    if (!square()) throw Error("power of non-square matrix");
    Matrix base = *this;
    if (e < 0) {
      if constexpr (requires(S a, S b) { a / b; })
        base = inverse();
      else
        throw Error("negative power needs division on the scalars");
    }
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    Matrix r = identity(rows_, proto());
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<S> a_;
};

using LMat = Matrix<LaurentPoly>;
using RMat = Matrix<RatFunc>;
using FMat = Matrix<FieldElem>;

inline RMat to_ratfunc(const LMat& a) {
  return a.map([](const LaurentPoly& f) { return RatFunc::from_laurent(f); });
}

inline bool all_laurent(const RMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_laurent()) return false;
  return true;
}

inline LMat to_laurent(const RMat& a) {
  return a.map([](const RatFunc& f) { return f.to_laurent(); });
}

inline LMat mat_bar(const LMat& a) {
  return a.map([](const LaurentPoly& f) { return f.bar(); });
}

inline RMat mat_bar(const RMat& a) {
  return a.map([](const RatFunc& f) { return f.bar(); });
}

inline FMat mat_eval(const LMat& a, const FieldElem& x) {
  return a.map([&](const LaurentPoly& f) { return f.eval(x); });
}

inline FMat mat_eval(const RMat& a, const FieldElem& x) {
  return a.map([&](const RatFunc& f) { return f.eval(x); });
}

inline LMat mat_embed(const LMat& a, const Field* bigger) {
  return a.map([&](const LaurentPoly& f) { return f.embedded_in(bigger); });
}

/// inverse of a Laurent matrix inside the Laurent ring; the determinant must
/// be a unit c * t^k
LMat laurent_inverse(const LMat& a);

/// defect bar(A) J A^T - J
template <class S>
Matrix<S> unitary_defect(const Matrix<S>& a, const Matrix<S>& j) {
  return mat_bar(a) * j * a.transpose() - j;
}

/// scalar k (a unit c*t^m) with bar(A) J A^T = k J, when one exists
std::optional<LaurentPoly> projective_unitary_scalar(const LMat& a, const LMat& j);

}  // namespace bforge

#endif
