#include "slzt/exact/algebraic.hpp"

namespace slzt {

RatXPoly to_rat_xpoly(const XPoly& p) {
  std::vector<RatFunc> c;
  c.reserve(p.size());
  for (const auto& coeff : p.coefficients()) c.emplace_back(coeff);
  return RatXPoly(std::move(c));
}

Modulus::Modulus(const XPoly& f) : Modulus(to_rat_xpoly(f)) {}

Modulus::Modulus(RatXPoly f) : f_(std::move(f)) {
  if (f_.degree() < 1 || !f_.is_monic()) throw std::invalid_argument("modulus must be monic of degree >= 1");
}

AlgebraicElem::AlgebraicElem(std::shared_ptr<const Modulus> mod, RatXPoly value)
    : mod_(std::move(mod)), value_(reduce_monic(value, mod_->poly())) {}

AlgebraicElem::AlgebraicElem(std::shared_ptr<const Modulus> mod, std::vector<RatFunc> coords)
    : mod_(std::move(mod)) {
  if (static_cast<int>(coords.size()) != mod_->degree())
    throw DimensionError("coordinate vector length differs from the modulus degree");
  value_ = RatXPoly(std::move(coords));
}

AlgebraicElem AlgebraicElem::constant(std::shared_ptr<const Modulus> mod, const RatFunc& c) {
  return AlgebraicElem(std::move(mod), RatXPoly(c));
}

AlgebraicElem AlgebraicElem::generator(std::shared_ptr<const Modulus> mod) {
  return AlgebraicElem(std::move(mod), RatXPoly::variable());
}

std::vector<RatFunc> AlgebraicElem::coords() const {
  std::vector<RatFunc> c(static_cast<std::size_t>(mod_->degree()));
  for (std::size_t i = 0; i < value_.size(); ++i) c[i] = value_.coeff(i);
  return c;
}

void AlgebraicElem::check_same_modulus(const AlgebraicElem& o) const {
  if (mod_ != o.mod_ && mod_->poly() != o.mod_->poly())
    throw std::invalid_argument("algebraic elements over different moduli");
}

AlgebraicElem operator+(const AlgebraicElem& a, const AlgebraicElem& b) {
  a.check_same_modulus(b);
  return AlgebraicElem(a.mod_, a.value_ + b.value_);
}

AlgebraicElem operator-(const AlgebraicElem& a, const AlgebraicElem& b) {
  a.check_same_modulus(b);
  return AlgebraicElem(a.mod_, a.value_ - b.value_);
}

AlgebraicElem operator*(const AlgebraicElem& a, const AlgebraicElem& b) {
  a.check_same_modulus(b);
  return AlgebraicElem(a.mod_, a.value_ * b.value_);
}

bool operator==(const AlgebraicElem& a, const AlgebraicElem& b) {
  a.check_same_modulus(b);
  return a.value_ == b.value_;
}

AlgebraicElem alg_mul(const AlgebraicElem& a, const AlgebraicElem& b) { return a * b; }

AlgebraicElem alg_inv(const AlgebraicElem& a) {
  auto eg = extended_gcd(a.representative(), a.modulus()->poly());
  if (eg.g.degree() != 0) throw ZeroDivisorError("element is a zero divisor modulo f");
  return AlgebraicElem(a.modulus(), eg.s);
}

std::ostream& operator<<(std::ostream& os, const AlgebraicElem& a) {
  return os << to_string(a.representative(), "x");
}

}  // namespace slzt
