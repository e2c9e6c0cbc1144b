#include "slzt/exact/poly.hpp"

#include <sstream>

namespace slzt {

BigRational make_rational(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Poly t_power(std::size_t k, const BigRational& c) { return Poly::monomial(c, k); }

Poly poly_from_ints(std::initializer_list<long> low_to_high) {
  std::vector<BigRational> v;
  v.reserve(low_to_high.size());
  for (long c : low_to_high) v.emplace_back(c);
  return Poly(std::move(v));
}

bool is_integral(const Poly& p) {
  for (const auto& c : p.coefficients())
    if (!is_integer(c)) return false;
  return true;
}

BigInt denominator_lcm(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, c.get_den());
  return l;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p, "t"); }

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << to_string(p, "x"); }

}  // namespace slzt
