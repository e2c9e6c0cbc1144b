#pragma once

#include <gmpxx.h>

#include <string>

namespace slzt {

using BigInt = mpz_class;
using BigRational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigRational make_rational(long num, long den = 1);

BigInt lcm(const BigInt& a, const BigInt& b);

std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

}  // namespace slzt
