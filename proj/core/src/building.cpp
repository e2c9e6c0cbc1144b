#include "slzt/building.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slzt::building {

namespace {

// Rank over Q by fraction-free-enough Gaussian elimination; matrices here are tiny.
std::size_t rank(Matrix<BigRational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const BigRational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

ParabolicVertex from_mask(unsigned mask) {
  ParabolicVertex s;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1U) s.insert(i + 1);
  return s;
}

bool is_subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

}  // namespace

ApartmentVertex ApartmentVertex::canonical(std::vector<std::int64_t> exponents) {
  if (exponents.empty()) throw DimensionError("apartment vertex needs at least one coordinate");
  const std::int64_t lo = *std::min_element(exponents.begin(), exponents.end());
  for (auto& x : exponents) x -= lo;
  return ApartmentVertex{std::move(exponents)};
}

std::string to_string(const ApartmentVertex& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.m.size(); ++i) os << (i ? "," : "") << v.m[i];
  os << ")";
  return os.str();
}

LatticeVertex LatticeVertex::from_apartment(const ApartmentVertex& v) {
  std::vector<LaurentSeries> d, d_inv;
  for (auto e : v.m) {
    d.push_back(LaurentSeries::monomial(1, e));
    d_inv.push_back(LaurentSeries::monomial(1, -e));
  }
  return LatticeVertex(Matrix<LaurentSeries>::diagonal(d), Matrix<LaurentSeries>::diagonal(d_inv),
                       LaurentSeries::kExactFloor);
}

LatticeVertex LatticeVertex::from_basis(Matrix<LaurentSeries> basis, std::int64_t floor) {
  if (!basis.square()) throw DimensionError("lattice basis must be square");
  auto inv = inverse(basis, floor);
  return LatticeVertex(std::move(basis), std::move(inv), floor);
}

LatticeVertex LatticeVertex::from_pair(Matrix<LaurentSeries> basis, Matrix<LaurentSeries> inverse,
                                       std::int64_t floor) {
  if (!basis.square() || basis.rows() != inverse.rows() || !inverse.square())
    throw DimensionError("lattice basis and inverse must be square of equal size");
  return LatticeVertex(std::move(basis), std::move(inverse), floor);
}

LatticeVertex LatticeVertex::origin(std::size_t n) {
  return from_apartment(ApartmentVertex{std::vector<std::int64_t>(n, 0)});
}

LatticeVertex LatticeVertex::translated(const Matrix<LaurentSeries>& h) const {
  return from_basis(h * basis_, floor_);
}

bool same_vertex(const LatticeVertex& a, const LatticeVertex& b) {
  const auto x = a.basis_inverse() * b.basis();
  std::int64_t lo = kInfiniteValuation;
  for (const auto& e : x.entries()) lo = std::min(lo, valuation(e));
  const auto y = x.map<LaurentSeries>([lo](const LaurentSeries& e) { return e.shifted(lo); });
  return valuation(det(y)) == 0;
}

std::int64_t conjugated_min_valuation(const Matrix<LaurentSeries>& g, const LatticeVertex& v) {
  const auto c = v.basis_inverse() * g * v.basis();
  std::int64_t lo = kInfiniteValuation;
  for (const auto& e : c.entries()) lo = std::min(lo, valuation_lower_bound(e));
  return lo;
}

bool fixes_vertex(const Matrix<LaurentSeries>& g, const LatticeVertex& v) {
  if (g.rows() != v.n() || !g.square()) throw DimensionError("fixes_vertex: size mismatch");
  const auto c = v.basis_inverse() * g * v.basis();
  bool all = true;
  // A decidably negative entry settles the question even if others are unknown.
  bool undecided = false;
  for (const auto& e : c.entries()) {
    if (e.exact_zero()) continue;
    if (e.has_terms() && e.top() > 0) return false;
    try {
      all = valuation_at_least(e, 0) && all;
    } catch (const PrecisionError&) {
      undecided = true;
    }
  }
  if (undecided && all) throw PrecisionError("fixes_vertex: entry valuation undecidable at stored floor");
  return all;
}

bool fixes_vertex(const Matrix<Poly>& g, const LatticeVertex& v) { return fixes_vertex(to_laurent(g), v); }

bool StabilizerShape::contains(const Matrix<Poly>& g) const {
  const std::size_t n = bound.size();
  if (g.rows() != n || g.cols() != n) throw DimensionError("shape size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& p = g(i, j);
      if (p.zero()) continue;
      if (bound[i][j] == kZeroEntry || p.degree() > bound[i][j]) return false;
    }
  return true;
}

StabilizerShape stabilizer_degree_bounds(const ApartmentVertex& v) {
  StabilizerShape s;
  const std::size_t n = v.n();
  s.bound.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t d = v.m[i] - v.m[j];
      s.bound[i][j] = d >= 0 ? d : StabilizerShape::kZeroEntry;
    }
  return s;
}

bool sector_contains(const ApartmentVertex& v) {
  return std::is_sorted(v.m.begin(), v.m.end(), std::greater<>());
}

Matrix<LaurentSeries> b_matrix(std::size_t n, std::int64_t k) {
  std::vector<LaurentSeries> d(n, LaurentSeries::monomial(1, k));
  d.back() = LaurentSeries::monomial(1, -k * static_cast<std::int64_t>(n - 1));
  return Matrix<LaurentSeries>::diagonal(d);
}

ApartmentVertex b_translate(const ApartmentVertex& v, std::int64_t k) {
  auto m = v.m;
  for (auto& x : m) x += k;
  m.back() -= k * static_cast<std::int64_t>(m.size());
  return ApartmentVertex::canonical(std::move(m));
}

std::int64_t contraction_profile(std::size_t n, std::size_t j, std::int64_t k) {
  if (j < 1 || j >= n) throw std::invalid_argument("contraction_profile: root index out of range");
  if (k < 0) throw std::invalid_argument("contraction_profile: k must be >= 0");
  const auto e = elementary<LaurentSeries>(n, j, n, LaurentSeries(1));
  const auto c = b_matrix(n, -k) * e * b_matrix(n, k);
  return valuation(c(j - 1, n - 1)) - valuation(e(j - 1, n - 1));
}

bool boundary_rule(std::size_t n, std::size_t i, const ParabolicVertex& I) {
  return !I.count(static_cast<int>(n)) || I.count(static_cast<int>(i));
}

bool boundary_action(std::size_t n, std::size_t i, const ParabolicVertex& I) {
  if (I.empty() || I.size() >= n) throw std::invalid_argument("parabolic vertex must be a proper nonempty subset");
  const auto e = elementary<BigRational>(n, i, n, BigRational(1));
  Matrix<BigRational> span(n, I.size());
  std::size_t c = 0;
  for (int k : I) span(static_cast<std::size_t>(k - 1), c++) = 1;
  const auto image = e * span;
  Matrix<BigRational> both(n, 2 * I.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < I.size(); ++k) {
      both(r, k) = span(r, k);
      both(r, I.size() + k) = image(r, k);
    }
  return rank(both) == rank(span);
}

CombinatoricsReport verify_M_combinatorics(std::size_t n) {
  if (n < 2 || n > 16) throw std::invalid_argument("verify_M_combinatorics: n out of range");
  CombinatoricsReport rep;
  rep.n = n;
  const unsigned full = (1U << n) - 1;
  const unsigned lower = (1U << (n - 1)) - 1;  // {1..n-1}

  std::vector<unsigned> fixed;
  rep.rule_matches = true;
  for (unsigned mask = 1; mask < full; ++mask) {
    ++rep.vertex_count;
    const auto I = from_mask(mask);
    bool all = true;
    for (std::size_t i = 1; i < n; ++i) {
      const bool act = boundary_action(n, i, I);
      if (act != boundary_rule(n, i, I)) rep.rule_matches = false;
      all = all && act;
    }
    if (all) fixed.push_back(mask);
  }
  rep.fixed_count = fixed.size();
  if (!rep.rule_matches) rep.failures.push_back("rank computation disagrees with the boundary rule");

  std::vector<unsigned> expected;
  for (unsigned mask = 1; mask <= lower; ++mask) expected.push_back(mask);
  const bool same_set = fixed == expected;
  if (!same_set) rep.failures.push_back("fixed set differs from nonempty subsets of {1..n-1}");

  rep.closed_under_subsets = true;
  for (unsigned a : fixed)
    for (unsigned b = a; b; b = (b - 1) & a)
      if (!std::binary_search(fixed.begin(), fixed.end(), b)) rep.closed_under_subsets = false;
  if (!rep.closed_under_subsets) rep.failures.push_back("fixed set not closed under nonempty subsets");

  // Maximal chains by counting paths through cover relations, smallest sets first.
  std::vector<unsigned> order = fixed;
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::map<unsigned, std::size_t> paths, longest;
  auto covers = [&](unsigned lo, unsigned hi) {
    if (lo == hi || !is_subset(lo, hi)) return false;
    for (unsigned k : fixed)
      if (k != lo && k != hi && is_subset(lo, k) && is_subset(k, hi)) return false;
    return true;
  };
  for (unsigned x : order) {
    std::size_t p = 0, len = 0;
    for (unsigned y : order)
      if (covers(y, x)) p += paths[y], len = std::max(len, longest[y]);
    paths[x] = p == 0 ? 1 : p;
    longest[x] = len + 1;
  }
  for (unsigned x : order) {
    bool maximal = true;
    for (unsigned y : order) maximal = maximal && !covers(x, y);
    if (maximal) rep.maximal_chains += paths[x];
    rep.max_chain_length = std::max(rep.max_chain_length, longest[x]);
  }
  std::size_t factorial = 1;
  for (std::size_t k = 2; k < n; ++k) factorial *= k;
  rep.fixed_set_is_subdivided_simplex = same_set && rep.closed_under_subsets &&
                                        rep.fixed_count == lower && rep.maximal_chains == factorial &&
                                        rep.max_chain_length == n - 1;
  if (!rep.fixed_set_is_subdivided_simplex)
    rep.failures.push_back("fixed poset is not the barycentric subdivision of an (n-2)-simplex");

  rep.facets_ok = true;
  for (std::size_t i = 1; i < n; ++i) {
    const auto facet = from_mask(full & ~(1U << (i - 1)));
    for (std::size_t j = 1; j < n; ++j) {
      const bool fixes = boundary_action(n, j, facet);
      if (fixes != (j != i)) rep.facets_ok = false;
    }
  }
  if (!rep.facets_ok) rep.failures.push_back("facet/wall assignment wrong");
  return rep;
}

}  // namespace slzt::building
