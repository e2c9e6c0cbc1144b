#include "slzt/rootlift.hpp"

#include <stdexcept>
#include <string>

namespace slzt::rootlift {

std::vector<long> primes(std::size_t count) {
  std::vector<long> out;
  for (long c = 2; out.size() < count; ++c) {
    bool prime = true;
    for (long p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

std::vector<long> q_sequence(int n) {
  if (n < 2) throw std::invalid_argument("q_sequence: n must be >= 2");
  std::vector<long> q{1};
  for (long p : primes(static_cast<std::size_t>(n - 1))) q.push_back(p + 1);
  return q;
}

XPoly build_f(int n) {
  XPoly f(1);
  for (long qi : q_sequence(n)) f = f * XPoly(std::vector<Poly>{t_power(1, qi), Poly(1)});
  return f - XPoly(1);
}

std::int64_t default_floor(int n) { return 1 - n - 40 * static_cast<std::int64_t>(n); }

RootLiftState lift_coefficients(int n, int branch, std::int64_t floor) {
  if (n < 2) throw std::invalid_argument("lift_root: n must be >= 2");
  if (branch < 1 || branch > n) throw std::invalid_argument("lift_root: branch out of range");
  if (floor > 1 - n) throw std::invalid_argument("lift_root: floor must be <= 1 - n");

  const auto q = q_sequence(n);
  const long qk = q[static_cast<std::size_t>(branch - 1)];

  RootLiftState st;
  st.n = n;
  st.branch = branch;
  st.floor = floor;
  st.permuted_q.push_back(qk);
  for (int j = 0; j < n; ++j)
    if (j != branch - 1) st.permuted_q.push_back(q[static_cast<std::size_t>(j)]);

  // Write alpha + q_j t = t (d_j + S) with S = sum_{i>=1} c_i s^i, s = t^-n and
  // d_j = q_j - q_k. The product over j is t^n g(S) with
  // g(S) = S * prod_{j != k} (S + d_j), and f(alpha) = 0 means g(S(s)) = s.
  // Comparing coefficients of s^m gives one equation, linear in c_m.
  std::vector<BigRational> g{BigRational(0), BigRational(1)};  // low to high in S
  for (std::size_t j = 1; j < st.permuted_q.size(); ++j) {
    const BigRational d = st.permuted_q[j] - qk;
    std::vector<BigRational> next(g.size() + 1);
    for (std::size_t p = 0; p < g.size(); ++p) {
      next[p] += g[p] * d;
      next[p + 1] += g[p];
    }
    g = std::move(next);
  }
  const BigRational linear = g[1];

  const auto m_max = static_cast<std::size_t>((1 - floor) / n);
  st.coefficients.assign(m_max + 1, BigRational(0));
  st.coefficients[0] = -qk;

  // power[p][i] = coefficient of s^i in S^p, for p = 1..n
  std::vector<std::vector<BigRational>> power(
      static_cast<std::size_t>(n) + 1, std::vector<BigRational>(m_max + 1));
  BigRational acc, prod;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t p = 2; p <= static_cast<std::size_t>(n); ++p) {
      acc = 0;
      for (std::size_t j = 1; j + (p - 1) <= m; ++j) {
        if (is_zero(power[p - 1][m - j])) continue;
        mpq_mul(prod.get_mpq_t(), st.coefficients[j].get_mpq_t(), power[p - 1][m - j].get_mpq_t());
        acc += prod;
      }
      power[p][m] = acc;
    }
    BigRational rest = 0;
    for (std::size_t p = 2; p < g.size(); ++p) rest += g[p] * power[p][m];
    if (is_zero(linear))
      throw DegenerateRecursionError("coefficient of c_" + std::to_string(m) + " vanishes");
    const BigRational rhs = (m == 1 ? BigRational(1) : BigRational(0)) - rest;
    st.coefficients[m] = rhs / linear;
    power[1][m] = st.coefficients[m];
  }
  return st;
}

LaurentSeries to_series(const RootLiftState& st) {
  std::vector<LaurentSeries::Term> terms;
  for (std::size_t i = 0; i < st.coefficients.size(); ++i)
    terms.emplace_back(1 - static_cast<std::int64_t>(i) * st.n, st.coefficients[i]);
  return LaurentSeries::from_terms(std::move(terms), st.floor);
}

LaurentSeries lift_root(int n, int branch, std::int64_t floor) {
  return to_series(lift_coefficients(n, branch, floor));
}

std::vector<LaurentSeries> lift_all_roots(int n, std::int64_t floor) {
  std::vector<LaurentSeries> roots;
  for (int k = 1; k <= n; ++k) roots.push_back(lift_root(n, k, floor));
  return roots;
}

LaurentSeries evaluate(const XPoly& f, const LaurentSeries& alpha) {
  return f.evaluate(alpha, [](const Poly& c) { return LaurentSeries::from_poly(c); });
}

std::int64_t residual_valuation(const LaurentSeries& alpha, int n) {
  return valuation_lower_bound(evaluate(build_f(n), alpha));
}

}  // namespace slzt::rootlift
