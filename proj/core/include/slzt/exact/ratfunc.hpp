#pragma once

#include <ostream>

#include "slzt/exact/poly.hpp"

namespace slzt {

// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT: ring embedding of Z
  explicit RatFunc(const BigRational& c) : num_(c), den_(1) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Quotient and proper remainder: *this = polynomial_part + proper_part,
  // where proper_part has strictly negative degree (valuation >= 1 at t = oo).
  std::pair<Poly, RatFunc> split_at_infinity() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

 private:
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.zero(); }

RatFunc inverse(const RatFunc& r);

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace slzt
