#pragma once

#include <ostream>
#include <string>

#include "slzt/exact/dense_poly.hpp"
#include "slzt/exact/rational.hpp"

namespace slzt {

// Polynomials in t with rational coefficients. Z[t] is the subring picked out
// by is_integral(); there is no separate integer-coefficient type.
using Poly = DensePoly<BigRational>;

// Polynomials in x whose coefficients are polynomials in t, e.g. f(x).
using XPoly = DensePoly<Poly>;

Poly t_power(std::size_t k, const BigRational& c = 1);
Poly poly_from_ints(std::initializer_list<long> low_to_high);

bool is_integral(const Poly& p);

// Least common multiple of coefficient denominators (1 for the zero polynomial).
BigInt denominator_lcm(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const XPoly& p);

}  // namespace slzt
