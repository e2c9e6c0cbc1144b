#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slzt/exact/errors.hpp"
#include "slzt/exact/rational.hpp"

namespace slzt {

// Univariate polynomial with coefficients in a commutative ring R, stored
// densely from the constant term upward. The coefficient vector never ends
// in a zero, so the zero polynomial has no coefficients and degree -1.
//
// R must be constructible from int, closed under + - *, equality comparable,
// and have a free is_zero(const R&).
template <class R>
class DensePoly {
 public:
  using Coeff = R;

  DensePoly() = default;
  DensePoly(int c) : coeffs_{R(c)} { trim(); }  // NOLINT: ring embedding of Z
  explicit DensePoly(R c) : coeffs_{std::move(c)} { trim(); }
  explicit DensePoly(std::vector<R> c) : coeffs_(std::move(c)) { trim(); }

  static DensePoly monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return DensePoly(std::move(v));
  }
  static DensePoly variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient of the k-th power; zero past the degree.
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
  const R& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == R(1); }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& c : a.coeffs_) c = R(0) - c;
    return a;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.zero() || b.zero()) return DensePoly();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePoly(std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  DensePoly scaled(const R& s) const {
    std::vector<R> v = coeffs_;
    for (auto& c : v) c = c * s;
    return DensePoly(std::move(v));
  }

  // Multiply by the variable to the k-th power.
  DensePoly shifted(std::size_t k) const {
    if (zero()) return {};
    std::vector<R> v(k, R(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(v));
  }

  // Horner evaluation at a value of another ring V; lift maps R -> V.
  template <class V, class Lift>
  V evaluate(const V& x, Lift lift) const {
    if (coeffs_.empty()) return lift(R(0));
    V acc = lift(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + lift(coeffs_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const DensePoly<R>& p) {
  return p.zero();
}

template <class R>
DensePoly<R> derivative(const DensePoly<R>& p) {
  if (p.degree() <= 0) return {};
  std::vector<R> v;
  v.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v.push_back(p.coeff(i) * R(static_cast<int>(i)));
  return DensePoly<R>(std::move(v));
}

// Remainder modulo a monic polynomial. Needs no division in R.
template <class R>
DensePoly<R> reduce_monic(const DensePoly<R>& a, const DensePoly<R>& m) {
  if (!m.is_monic()) throw std::invalid_argument("reduce_monic: modulus is not monic");
  const int dm = m.degree();
  std::vector<R> r = a.coefficients();
  for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
    R c = r[k];
    if (is_zero(c)) continue;
    for (int j = 0; j <= dm; ++j) r[k - dm + j] = r[k - dm + j] - c * m.coeff(j);
  }
  if (static_cast<int>(r.size()) > dm) r.resize(std::max(dm, 0));
  return DensePoly<R>(std::move(r));
}

// Euclidean division over a field R: a = q*b + r with deg r < deg b.
template <class R>
std::pair<DensePoly<R>, DensePoly<R>> divmod(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.zero()) throw ZeroDivisorError("polynomial division by zero");
  const int db = b.degree();
  std::vector<R> r = a.coefficients();
  if (a.degree() < db) return {DensePoly<R>(), a};
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  const R lead_inv = R(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    R c = r[k] * lead_inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - c * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {DensePoly<R>(std::move(q)), DensePoly<R>(std::move(r))};
}

template <class R>
DensePoly<R> make_monic(const DensePoly<R>& p) {
  if (p.zero()) return p;
  return p.scaled(R(1) / p.leading());
}

// Monic gcd over a field.
template <class R>
DensePoly<R> gcd(DensePoly<R> a, DensePoly<R> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class R>
struct ExtendedGcd {
  DensePoly<R> g;  // monic
  DensePoly<R> s;  // s*a + t*b = g
  DensePoly<R> t;
};

template <class R>
ExtendedGcd<R> extended_gcd(const DensePoly<R>& a, const DensePoly<R>& b) {
  DensePoly<R> r0 = a, r1 = b;
  DensePoly<R> s0(1), s1;
  DensePoly<R> t0, t1(1);
  while (!r1.zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.zero()) return {r0, s0, t0};
  const R inv = R(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class R>
std::string to_string(const DensePoly<R>& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const R& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    std::ostringstream cs;
    cs << c;
    const std::string s = cs.str();
    const bool unit = (s == "1");
    if (k == 0 || !unit) {
      const bool wrap = k > 0 && s.find_first_of("+ ") != std::string::npos;
      os << (wrap ? "(" : "") << s << (wrap ? ")" : "");
    }
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace slzt
