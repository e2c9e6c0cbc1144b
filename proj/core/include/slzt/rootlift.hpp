#pragma once

#include <cstdint>
#include <vector>

#include "slzt/exact/laurent.hpp"
#include "slzt/exact/poly.hpp"

namespace slzt::rootlift {

// The first `count` primes: 2, 3, 5, ...
std::vector<long> primes(std::size_t count);

// q_1 = 1 and q_i = p_(i-1) + 1 for 2 <= i <= n.
std::vector<long> q_sequence(int n);

// f(x) = prod_i (x + q_i t) - 1, monic of degree n in x over Z[t].
XPoly build_f(int n);

// Forty coefficients per root past the leading one: 1 - n - 40n.
std::int64_t default_floor(int n);

class DegenerateRecursionError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// Coefficients of one root branch, alpha = sum_i c_i t^(1 - i n).
///
/// Branch k puts q_k at the front of the sequence, so c_0 = -q_k and the
/// remaining factors alpha + q_j t start with (q_j - q_k) t.
struct RootLiftState {
  int n = 0;
  int branch = 0;                         // 1-based
  std::vector<BigRational> coefficients;  // c_0, c_1, ..., c_m
  std::vector<long> permuted_q;           // q_k first, the rest in order
  std::int64_t floor = 0;
};

// Runs the recursion far enough that every exponent >= floor is determined.
// Requires n >= 2, 1 <= branch <= n, floor <= 1 - n.
RootLiftState lift_coefficients(int n, int branch, std::int64_t floor);

LaurentSeries to_series(const RootLiftState& state);

LaurentSeries lift_root(int n, int branch, std::int64_t floor);

std::vector<LaurentSeries> lift_all_roots(int n, std::int64_t floor);

// f evaluated at a series, with f's Z[t] coefficients lifted exactly.
LaurentSeries evaluate(const XPoly& f, const LaurentSeries& alpha);

// Valuation of f_n(alpha): exact when a residual term survives above the
// propagated floor, otherwise the guaranteed bound 1 - floor;
// kInfiniteValuation if the residual is exactly zero.
std::int64_t residual_valuation(const LaurentSeries& alpha, int n);

}  // namespace slzt::rootlift
