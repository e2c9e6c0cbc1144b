#include "slzt/exact/matrix.hpp"

namespace slzt {

Matrix<LaurentSeries> inverse(const Matrix<LaurentSeries>& m, std::int64_t floor) {
  Matrix<LaurentSeries> adj = adjugate(m);
  LaurentSeries d;
  for (std::size_t j = 0; j < m.cols(); ++j) d = d + m(0, j) * adj(j, 0);
  if (d.exact_zero()) throw SingularMatrixError("determinant is zero");
  if (!d.has_terms()) throw PrecisionError("determinant vanishes at stored precision");
  return adj.scaled(inverse(d, floor));
}

Matrix<LaurentSeries> to_laurent(const Matrix<Poly>& m) {
  return m.map<LaurentSeries>([](const Poly& p) { return LaurentSeries::from_poly(p); });
}

Matrix<LaurentSeries> to_laurent(const Matrix<BigRational>& m) {
  return m.map<LaurentSeries>([](const BigRational& q) { return LaurentSeries(q); });
}

Matrix<RatFunc> to_ratfunc(const Matrix<Poly>& m) {
  return m.map<RatFunc>([](const Poly& p) { return RatFunc(p); });
}

bool is_integral(const Matrix<Poly>& m) {
  for (const auto& p : m.entries())
    if (!is_integral(p)) return false;
  return true;
}

}  // namespace slzt
