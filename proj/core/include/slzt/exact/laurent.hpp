#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "slzt/exact/poly.hpp"
#include "slzt/exact/ratfunc.hpp"

namespace slzt {

inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

/// Truncated element of Q((1/t)).
///
/// The value denoted is the sum of the stored terms plus an unknown tail made
/// of exponents strictly below floor(). Every stored exponent is >= floor()
/// and every coefficient above the floor that is not stored is known to be
/// zero. An exact series (a Laurent polynomial in t, e.g. anything coming from
/// Z[t]) has no unknown tail; is_exact() reports it and floor() is the
/// sentinel kExactFloor, which behaves as minus infinity.
///
/// Precision propagates worst-case:
///   floor(a + b) = max(floor a, floor b)
///   floor(a * b) = max(floor a + top b, floor b + top a)
class LaurentSeries {
 public:
  using Term = std::pair<std::int64_t, BigRational>;
  static constexpr std::int64_t kExactFloor = std::numeric_limits<std::int64_t>::min();

  LaurentSeries() = default;  // exact zero
  LaurentSeries(int c);       // NOLINT: exact constant
  explicit LaurentSeries(const BigRational& c);

  static LaurentSeries monomial(const BigRational& c, std::int64_t exponent,
                                std::int64_t floor = kExactFloor);
  // Terms in any order; zeros and exponents below the floor are dropped,
  // repeated exponents are summed.
  static LaurentSeries from_terms(std::vector<Term> terms, std::int64_t floor = kExactFloor);
  static LaurentSeries from_poly(const Poly& p);
  static LaurentSeries from_ratfunc(const RatFunc& r, std::int64_t floor);
  // Nothing known above the floor except that it is zero: O(t^floor).
  static LaurentSeries unknown_below(std::int64_t floor);

  bool is_exact() const { return floor_ == kExactFloor; }
  std::int64_t floor() const { return floor_; }
  bool exact_zero() const { return is_exact() && terms_.empty(); }
  bool has_terms() const { return !terms_.empty(); }
  std::int64_t top() const;
  std::int64_t bottom() const;
  const BigRational& leading() const;
  // Stored terms, exponents strictly decreasing.
  const std::vector<Term>& terms() const { return terms_; }

  // Coefficient of t^e; PrecisionError when e is below the floor.
  BigRational coeff(std::int64_t e) const;

  // Forget everything below the new floor (a floor can only be raised).
  LaurentSeries truncated(std::int64_t floor) const;
  // Multiply by t^k.
  LaurentSeries shifted(std::int64_t k) const;
  LaurentSeries scaled(const BigRational& s) const;

  // Exponents >= 0: an exact polynomial. Requires floor() <= 0.
  Poly polynomial_part() const;
  // Exponents < 0, keeping the floor.
  LaurentSeries fractional_part() const;

  // True if both agree on every exponent at or above their common floor.
  bool agrees_with(const LaurentSeries& other) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.floor_ == b.floor_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

 private:
  LaurentSeries(std::vector<Term> sorted_terms, std::int64_t floor)
      : terms_(std::move(sorted_terms)), floor_(floor) {}

  std::vector<Term> terms_;
  std::int64_t floor_ = kExactFloor;
};

inline bool is_zero(const LaurentSeries& a) { return a.exact_zero(); }

/// val(t) = -1, val(1/t) = +1. kInfiniteValuation for exact zero;
/// PrecisionError when nothing is stored above a finite floor.
std::int64_t valuation(const LaurentSeries& a);

/// A valuation the true value is guaranteed to reach: the exact valuation when
/// a term is stored, otherwise 1 - floor().
std::int64_t valuation_lower_bound(const LaurentSeries& a);

/// Decide val(a) >= v; PrecisionError when the truncation cannot tell.
bool valuation_at_least(const LaurentSeries& a, std::int64_t v);

/// Leading-term division followed by the geometric recursion. An inexact input
/// keeps its relative precision; an exact input needs `floor`. Throws
/// ZeroDivisorError on exact zero and PrecisionError on an empty stored part.
LaurentSeries inverse(const LaurentSeries& a, std::optional<std::int64_t> floor = std::nullopt);

LaurentSeries pow(const LaurentSeries& a, long k,
                  std::optional<std::int64_t> floor = std::nullopt);

std::string to_string(const LaurentSeries& a);
std::ostream& operator<<(std::ostream& os, const LaurentSeries& a);

}  // namespace slzt
