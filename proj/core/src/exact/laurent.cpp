#include "slzt/exact/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace slzt {
namespace {

using Term = LaurentSeries::Term;
constexpr std::int64_t kExact = LaurentSeries::kExactFloor;

std::int64_t max_floor(std::int64_t a, std::int64_t b) { return std::max(a, b); }

// Largest exponent the value can carry: the top stored term, or just below
// the floor when nothing is stored.
std::int64_t upper_exponent(const LaurentSeries& a) { return a.has_terms() ? a.top() : a.floor() - 1; }

void drop_below(std::vector<Term>& terms, std::int64_t floor) {
  while (!terms.empty() && terms.back().first < floor) terms.pop_back();
}

}  // namespace

LaurentSeries::LaurentSeries(int c) : LaurentSeries(BigRational(c)) {}

LaurentSeries::LaurentSeries(const BigRational& c) {
  if (!is_zero(c)) terms_.emplace_back(0, c);
}

LaurentSeries LaurentSeries::monomial(const BigRational& c, std::int64_t exponent,
                                      std::int64_t floor) {
  std::vector<Term> t;
  if (!is_zero(c) && exponent >= floor) t.emplace_back(exponent, c);
  return LaurentSeries(std::move(t), floor);
}

LaurentSeries LaurentSeries::from_terms(std::vector<Term> terms, std::int64_t floor) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& [e, c] : terms) {
    if (e < floor) break;
    if (!out.empty() && out.back().first == e) {
      out.back().second += c;
    } else {
      out.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(out, [](const Term& t) { return is_zero(t.second); });
  return LaurentSeries(std::move(out), floor);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
  std::vector<Term> t;
  for (int k = p.degree(); k >= 0; --k) {
    const auto& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (!is_zero(c)) t.emplace_back(k, c);
  }
  return LaurentSeries(std::move(t), kExact);
}

LaurentSeries LaurentSeries::from_ratfunc(const RatFunc& r, std::int64_t floor) {
  if (r.is_polynomial()) return from_poly(r.num()).truncated(floor);
  if (r.zero()) return LaurentSeries();
  const LaurentSeries num = from_poly(r.num());
  const LaurentSeries den_inv = inverse(from_poly(r.den()), floor - r.num().degree());
  return (num * den_inv).truncated(floor);
}

LaurentSeries LaurentSeries::unknown_below(std::int64_t floor) { return LaurentSeries({}, floor); }

std::int64_t LaurentSeries::top() const {
  if (terms_.empty()) throw PrecisionError("top(): series has no stored terms");
  return terms_.front().first;
}

std::int64_t LaurentSeries::bottom() const {
  if (terms_.empty()) throw PrecisionError("bottom(): series has no stored terms");
  return terms_.back().first;
}

const BigRational& LaurentSeries::leading() const {
  if (terms_.empty()) throw PrecisionError("leading(): series has no stored terms");
  return terms_.front().second;
}

BigRational LaurentSeries::coeff(std::int64_t e) const {
  if (e < floor_) throw PrecisionError("coefficient requested below the precision floor");
  for (const auto& [x, c] : terms_) {
    if (x == e) return c;
    if (x < e) break;
  }
  return 0;
}

LaurentSeries LaurentSeries::truncated(std::int64_t floor) const {
  if (floor <= floor_) return *this;
  std::vector<Term> t = terms_;
  drop_below(t, floor);
  return LaurentSeries(std::move(t), floor);
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.first += k;
  return LaurentSeries(std::move(t), is_exact() ? kExact : floor_ + k);
}

LaurentSeries LaurentSeries::scaled(const BigRational& s) const {
  if (is_zero(s)) return is_exact() ? LaurentSeries() : unknown_below(floor_);
  std::vector<Term> t = terms_;
  for (auto& term : t) term.second *= s;
  return LaurentSeries(std::move(t), floor_);
}

Poly LaurentSeries::polynomial_part() const {
  if (floor_ > 0) throw PrecisionError("polynomial part needs the constant term to be known");
  std::vector<BigRational> c;
  for (const auto& [e, v] : terms_) {
    if (e < 0) break;
    if (c.empty()) c.assign(static_cast<std::size_t>(e) + 1, BigRational(0));
    c[static_cast<std::size_t>(e)] = v;
  }
  return Poly(std::move(c));
}

LaurentSeries LaurentSeries::fractional_part() const {
  std::vector<Term> t;
  for (const auto& term : terms_)
    if (term.first < 0) t.push_back(term);
  return LaurentSeries(std::move(t), floor_);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  const std::int64_t f = max_floor(floor_, other.floor_);
  auto a = terms_, b = other.terms_;
  drop_below(a, f);
  drop_below(b, f);
  return a == b;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.exact_zero()) return b;
  if (b.exact_zero()) return a;
  const std::int64_t floor = max_floor(a.floor_, b.floor_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
      if (i->first < floor) break;
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->first > i->first) {
      if (j->first < floor) break;
      out.push_back(*j++);
    } else {
      if (i->first < floor) break;
      BigRational s = i->second + j->second;
      if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return LaurentSeries(std::move(out), floor);
}

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.exact_zero() || b.exact_zero()) return LaurentSeries();
  std::int64_t floor = kExact;
  if (!a.is_exact()) floor = max_floor(floor, a.floor_ + upper_exponent(b));
  if (!b.is_exact()) floor = max_floor(floor, b.floor_ + upper_exponent(a));
  if (!a.has_terms() || !b.has_terms()) return LaurentSeries::unknown_below(floor);
  // Exact monomial factors (diagonal scalings, identity entries) only shift and scale.
  if (a.is_exact() && a.terms_.size() == 1) {
    auto r = b.shifted(a.terms_[0].first);
    return a.terms_[0].second == 1 ? r : r.scaled(a.terms_[0].second);
  }
  if (b.is_exact() && b.terms_.size() == 1) {
    auto r = a.shifted(b.terms_[0].first);
    return b.terms_[0].second == 1 ? r : r.scaled(b.terms_[0].second);
  }

  const std::int64_t hi = a.top() + b.top();
  const std::int64_t lo = std::max(floor, a.bottom() + b.bottom());
  if (hi < lo) return LaurentSeries::unknown_below(floor);

  std::vector<BigRational> acc(static_cast<std::size_t>(hi - lo + 1));
  BigRational prod;
  for (const auto& [ea, ca] : a.terms_) {
    if (ea + b.top() < lo) break;
    for (const auto& [eb, cb] : b.terms_) {
      const std::int64_t e = ea + eb;
      if (e < lo) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto& slot = acc[static_cast<std::size_t>(hi - e)];
      slot += prod;
    }
  }
  std::vector<Term> out;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!is_zero(acc[k])) out.emplace_back(hi - static_cast<std::int64_t>(k), std::move(acc[k]));
  return LaurentSeries(std::move(out), floor);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.is_exact() && b.terms_.size() > 1) {
    if (a.is_exact())
      throw std::invalid_argument("exact / exact series needs an explicit floor; use inverse()");
    if (!a.has_terms()) return LaurentSeries::unknown_below(a.floor_ - b.top());
    // Keep the relative precision of the numerator.
    const std::int64_t rel = a.top() - a.floor_;
    const std::int64_t want = a.top() - b.top() - rel;
    return (a * inverse(b, want - a.top())).truncated(want);
  }
  return a * inverse(b);
}

std::int64_t valuation(const LaurentSeries& a) {
  if (a.exact_zero()) return kInfiniteValuation;
  if (!a.has_terms()) throw PrecisionError("valuation undecidable: no stored terms above the floor");
  return -a.top();
}

std::int64_t valuation_lower_bound(const LaurentSeries& a) {
  if (a.exact_zero()) return kInfiniteValuation;
  if (a.has_terms()) return -a.top();
  return 1 - a.floor();
}

bool valuation_at_least(const LaurentSeries& a, std::int64_t v) {
  if (a.exact_zero()) return true;
  if (a.has_terms()) return -a.top() >= v;
  if (1 - a.floor() >= v) return true;
  throw PrecisionError("cannot decide valuation >= " + std::to_string(v) +
                       " with floor " + std::to_string(a.floor()));
}

LaurentSeries inverse(const LaurentSeries& a, std::optional<std::int64_t> floor) {
  if (a.exact_zero()) throw ZeroDivisorError("inverse of exact zero series");
  if (!a.has_terms()) throw PrecisionError("inverse undefined: no stored terms above the floor");
  const std::int64_t d = a.top();
  const BigRational& c = a.leading();
  if (a.is_exact() && a.terms().size() == 1) {
    LaurentSeries m = LaurentSeries::monomial(1 / c, -d);
    return floor ? m.truncated(*floor) : m;
  }
  std::int64_t f;
  if (a.is_exact()) {
    if (!floor) throw std::invalid_argument("inverse of an exact non-monomial series needs a floor");
    f = *floor;
  } else {
    f = a.floor() - 2 * d;
    if (floor) f = std::max(f, *floor);
  }
  if (f > -d) return LaurentSeries::unknown_below(f);

  const auto len = static_cast<std::size_t>(-d - f + 1);
  const BigRational c_inv = 1 / c;
  std::vector<BigRational> b(len);
  b[0] = c_inv;
  BigRational sum, prod;
  for (std::size_t i = 1; i < len; ++i) {
    sum = 0;
    for (std::size_t k = 1; k < a.terms().size(); ++k) {
      const auto& [x, ax] = a.terms()[k];
      const auto gap = static_cast<std::size_t>(d - x);
      if (gap > i) break;
      if (is_zero(b[i - gap])) continue;
      mpq_mul(prod.get_mpq_t(), ax.get_mpq_t(), b[i - gap].get_mpq_t());
      sum += prod;
    }
    if (!is_zero(sum)) b[i] = -c_inv * sum;
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < len; ++i)
    if (!is_zero(b[i])) out.emplace_back(-d - static_cast<std::int64_t>(i), std::move(b[i]));
  return LaurentSeries::from_terms(std::move(out), f);
}

LaurentSeries pow(const LaurentSeries& a, long k, std::optional<std::int64_t> floor) {
  LaurentSeries base = k < 0 ? inverse(a, floor) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  LaurentSeries result(1);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string to_string(const LaurentSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    BigRational mag = abs(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  if (!a.is_exact()) {
    os << (first ? "" : " + ") << "O(t^" << a.floor() - 1 << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& a) { return os << to_string(a); }

}  // namespace slzt
