#include "slzt/exact/ratfunc.hpp"

namespace slzt {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.zero()) throw ZeroDivisorError("rational function with zero denominator");
  if (num.zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  BigRational lead_inv = 1 / den.leading();
  num_ = num.scaled(lead_inv);
  den_ = den.scaled(lead_inv);
}

std::pair<Poly, RatFunc> RatFunc::split_at_infinity() const {
  auto [q, r] = divmod(num_, den_);
  return {q, RatFunc(r, den_)};
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.zero() || b.zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.zero()) throw ZeroDivisorError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc inverse(const RatFunc& r) { return RatFunc(1) / r; }

std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
  if (r.is_polynomial()) return os << r.num();
  return os << "(" << r.num() << ")/(" << r.den() << ")";
}

}  // namespace slzt
