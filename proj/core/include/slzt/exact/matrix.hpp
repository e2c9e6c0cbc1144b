#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

#include "slzt/exact/dense_poly.hpp"
#include "slzt/exact/errors.hpp"
#include "slzt/exact/laurent.hpp"
#include "slzt/exact/poly.hpp"
#include "slzt/exact/ratfunc.hpp"

namespace slzt {

// Dense row-major matrix over one commutative ring R.
template <class R>
class Matrix {
 public:
  using Scalar = R;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw DimensionError("entry count differs from rows*cols");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<R>& entries() const { return data_; }

  template <class S, class F>
  Matrix<S> map(F&& fn) const {
    std::vector<S> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(fn(x));
    return Matrix<S>(rows_, cols_, std::move(out));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(const R& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = m.data_[k] + b.data_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = m.data_[k] - b.data_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const R& y = b(k, j);
          if (is_zero(y)) continue;
          m(i, j) = m(i, j) + x * y;
        }
      }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <class R>
bool is_identity(const Matrix<R>& m) {
  return m.square() && m == Matrix<R>::identity(m.rows());
}

// Coefficients of det(xI - M), highest power first, by Berkowitz's
// division-free recursion over the leading principal submatrices.
template <class R>
std::vector<R> berkowitz_coefficients(const Matrix<R>& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<R> v{R(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t s = r - 1;  // size of the already-processed block
    std::vector<R> tcol(r + 1, R(0));
    tcol[0] = R(1);
    tcol[1] = R(0) - m(s, s);
    std::vector<R> w(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = m(i, s);
    for (std::size_t k = 0; k + 2 <= r; ++k) {
      R dot(0);
      for (std::size_t i = 0; i < s; ++i)
        if (!is_zero(w[i]) && !is_zero(m(s, i))) dot = dot + m(s, i) * w[i];
      tcol[k + 2] = R(0) - dot;
      if (k + 3 <= r) {
        std::vector<R> next(s, R(0));
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j)
            if (!is_zero(m(i, j)) && !is_zero(w[j])) next[i] = next[i] + m(i, j) * w[j];
        w = std::move(next);
      }
    }
    std::vector<R> nv(r + 1, R(0));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j)
        if (!is_zero(tcol[i - j]) && !is_zero(v[j])) nv[i] = nv[i] + tcol[i - j] * v[j];
    v = std::move(nv);
  }
  return v;
}

// det(xI - M) as a polynomial in x over R (monic).
template <class R>
DensePoly<R> char_poly(const Matrix<R>& m) {
  auto v = berkowitz_coefficients(m);
  std::vector<R> low_to_high(v.rbegin(), v.rend());
  return DensePoly<R>(std::move(low_to_high));
}

template <class R>
R det(const Matrix<R>& m) {
  auto v = berkowitz_coefficients(m);
  return m.rows() % 2 == 0 ? v.back() : R(0) - v.back();
}

// adj(M) = (-1)^(n+1) (M^(n-1) + c1 M^(n-2) + ... + c_(n-1) I), from Cayley-Hamilton.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  auto c = berkowitz_coefficients(m);
  const std::size_t n = m.rows();
  Matrix<R> id = Matrix<R>::identity(n);
  Matrix<R> b = id;
  for (std::size_t i = 1; i < n; ++i) b = b * m + id.scaled(c[i]);
  return n % 2 == 1 ? b : b.scaled(R(-1));
}

inline BigRational unit_inverse(const BigRational& x) {
  if (is_zero(x)) throw SingularMatrixError("determinant is zero");
  return 1 / x;
}
inline RatFunc unit_inverse(const RatFunc& x) {
  if (x.zero()) throw SingularMatrixError("determinant is zero");
  return inverse(x);
}
inline Poly unit_inverse(const Poly& x) {
  if (x.zero() || x.degree() > 0) throw SingularMatrixError("determinant is not a unit of Q[t]");
  return Poly(1 / x.leading());
}
inline LaurentSeries unit_inverse(const LaurentSeries& x) {
  if (x.exact_zero()) throw SingularMatrixError("determinant is zero");
  return inverse(x);
}

// Cofactor inverse adj(M) / det(M); det must be a unit of R.
template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  Matrix<R> adj = adjugate(m);
  R d(0);
  for (std::size_t j = 0; j < m.cols(); ++j) d = d + m(0, j) * adj(j, 0);
  return adj.scaled(unit_inverse(d));
}

// Inverse over truncated Laurent series when det(M) may be an exact
// non-monomial series: the determinant inverse is taken to `floor`.
Matrix<LaurentSeries> inverse(const Matrix<LaurentSeries>& m, std::int64_t floor);

template <class R>
Matrix<R> power(const Matrix<R>& m, const BigInt& e) {
  if (sgn(e) < 0) throw std::invalid_argument("power: negative BigInt exponent");
  Matrix<R> result = Matrix<R>::identity(m.rows());
  Matrix<R> base = m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(e.get_mpz_t(), b)) result = result * base;
    if (b + 1 < bits) base = base * base;
  }
  return result;
}

template <class R>
Matrix<R> power(const Matrix<R>& m, long e) {
  if (e < 0) return power(inverse(m), BigInt(-e));
  return power(m, BigInt(e));
}

// Block-diagonal embedding of m into the top-left corner of an n x n identity.
template <class R>
Matrix<R> embed_top_left(const Matrix<R>& m, std::size_t n) {
  if (m.rows() > n || m.cols() > n) throw DimensionError("embedding into a smaller matrix");
  Matrix<R> out = Matrix<R>::identity(n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Matrix<LaurentSeries> to_laurent(const Matrix<Poly>& m);
Matrix<LaurentSeries> to_laurent(const Matrix<BigRational>& m);
Matrix<RatFunc> to_ratfunc(const Matrix<Poly>& m);
bool is_integral(const Matrix<Poly>& m);

template <class R>
std::ostream& operator<<(std::ostream& os, const Matrix<R>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

}  // namespace slzt
