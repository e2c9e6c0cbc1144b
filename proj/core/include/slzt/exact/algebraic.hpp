#pragma once

#include <memory>
#include <ostream>
#include <vector>

#include "slzt/exact/dense_poly.hpp"
#include "slzt/exact/ratfunc.hpp"

namespace slzt {

using RatXPoly = DensePoly<RatFunc>;

// Monic modulus f(x) with coefficients in Q(t), shared by all residues.
class Modulus {
 public:
  explicit Modulus(const XPoly& f);
  explicit Modulus(RatXPoly f);

  const RatXPoly& poly() const { return f_; }
  int degree() const { return f_.degree(); }

 private:
  RatXPoly f_;
};

RatXPoly to_rat_xpoly(const XPoly& p);

// Residue class in Q(t)[x]/(f), stored by its coordinates on 1, x, ..., x^(n-1).
class AlgebraicElem {
 public:
  AlgebraicElem(std::shared_ptr<const Modulus> mod, RatXPoly value);
  AlgebraicElem(std::shared_ptr<const Modulus> mod, std::vector<RatFunc> coords);

  static AlgebraicElem constant(std::shared_ptr<const Modulus> mod, const RatFunc& c);
  static AlgebraicElem generator(std::shared_ptr<const Modulus> mod);  // the class of x

  const std::shared_ptr<const Modulus>& modulus() const { return mod_; }
  // Always exactly degree(f) entries.
  std::vector<RatFunc> coords() const;
  const RatXPoly& representative() const { return value_; }

  friend AlgebraicElem operator+(const AlgebraicElem& a, const AlgebraicElem& b);
  friend AlgebraicElem operator-(const AlgebraicElem& a, const AlgebraicElem& b);
  friend AlgebraicElem operator*(const AlgebraicElem& a, const AlgebraicElem& b);
  friend bool operator==(const AlgebraicElem& a, const AlgebraicElem& b);
  friend bool operator!=(const AlgebraicElem& a, const AlgebraicElem& b) { return !(a == b); }

 private:
  void check_same_modulus(const AlgebraicElem& o) const;

  std::shared_ptr<const Modulus> mod_;
  RatXPoly value_;  // reduced: degree < degree(f)
};

AlgebraicElem alg_mul(const AlgebraicElem& a, const AlgebraicElem& b);
// ZeroDivisorError when gcd(a, f) is not constant.
AlgebraicElem alg_inv(const AlgebraicElem& a);

std::ostream& operator<<(std::ostream& os, const AlgebraicElem& a);

}  // namespace slzt
