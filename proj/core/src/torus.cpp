#include "slzt/torus.hpp"

#include <cstdlib>
#include <stdexcept>

#include "slzt/rootlift.hpp"

namespace slzt::torus {

Matrix<Poly> companion_matrix(const XPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion_matrix: f must be monic");
  const auto n = static_cast<std::size_t>(f.degree());
  Matrix<Poly> c(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) c(j + 1, j) = Poly(1);
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

Matrix<Poly> companion_matrix(int n) { return companion_matrix(rootlift::build_f(n)); }

Matrix<Poly> evaluate_at(const XPoly& p, const Matrix<Poly>& m) {
  const auto id = Matrix<Poly>::identity(m.rows());
  return p.evaluate(m, [&](const Poly& c) { return id.scaled(c); });
}

TorusGenerators make_generators(int n) {
  TorusGenerators g;
  g.n = n;
  g.f = rootlift::build_f(n);
  g.companion = companion_matrix(g.f);
  const auto id = Matrix<Poly>::identity(static_cast<std::size_t>(n));
  for (long qi : rootlift::q_sequence(n)) g.factors.push_back(g.companion + id.scaled(t_power(1, qi)));
  for (int i = 1; i < n; ++i) {
    const auto& h = g.factors[static_cast<std::size_t>(i)];
    Matrix<Poly> a = h * h;
    if (det(a) != Poly(1))
      throw ConstructionError("generator a_" + std::to_string(i) + " does not have determinant 1");
    g.generators.push_back(std::move(a));
  }
  return g;
}

Matrix<Poly> word_matrix(const TorusGenerators& gens, const WordExponents& m) {
  if (m.size() != gens.generators.size()) throw DimensionError("word length differs from rank");
  auto w = Matrix<Poly>::identity(static_cast<std::size_t>(gens.n));
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) w = w * power(gens.generators[i], m[i]);
  return w;
}

std::vector<WordExponents> nonzero_words(int rank, long bound) {
  std::vector<WordExponents> out;
  if (rank <= 0) return out;
  WordExponents m(static_cast<std::size_t>(rank), -bound);
  while (true) {
    bool zero = true;
    for (long x : m) zero = zero && x == 0;
    if (!zero) out.push_back(m);
    int k = rank - 1;
    while (k >= 0 && m[static_cast<std::size_t>(k)] == bound) m[static_cast<std::size_t>(k--)] = -bound;
    if (k < 0) break;
    ++m[static_cast<std::size_t>(k)];
  }
  return out;
}

LeadingTerm predicted_leading_term(const WordExponents& m) {
  const auto p = rootlift::primes(m.size());
  LeadingTerm lt{BigRational(1), 0};
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt pp;
    mpz_pow_ui(pp.get_mpz_t(), BigInt(p[i]).get_mpz_t(), static_cast<unsigned long>(2 * std::labs(m[i])));
    if (m[i] >= 0) lt.coefficient *= BigRational(pp);
    else lt.coefficient /= BigRational(pp);
    lt.exponent += 2 * m[i];
  }
  return lt;
}

EigenSystem::EigenSystem(int n, std::int64_t floor, long max_power)
    : n_(n), floor_(floor), max_power_(max_power), q_(rootlift::q_sequence(n)) {
  roots_ = rootlift::lift_all_roots(n, floor);
  powers_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& per_branch = powers_[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i < n; ++i) {
      const LaurentSeries f = factor(j, i);
      const LaurentSeries sq = f * f;
      const LaurentSeries sq_inv = inverse(sq);
      std::vector<LaurentSeries> pw(static_cast<std::size_t>(2 * max_power + 1));
      pw[static_cast<std::size_t>(max_power)] = LaurentSeries(1);
      for (long p = 1; p <= max_power; ++p) {
        pw[static_cast<std::size_t>(max_power + p)] = pw[static_cast<std::size_t>(max_power + p - 1)] * sq;
        pw[static_cast<std::size_t>(max_power - p)] = pw[static_cast<std::size_t>(max_power - p + 1)] * sq_inv;
      }
      per_branch.push_back(std::move(pw));
    }
  }
}

const LaurentSeries& EigenSystem::root(int branch) const {
  if (branch < 1 || branch > n_) throw std::out_of_range("branch out of range");
  return roots_[static_cast<std::size_t>(branch - 1)];
}

LaurentSeries EigenSystem::factor(int branch, int generator) const {
  if (generator < 1 || generator >= n_) throw std::out_of_range("generator index out of range");
  return root(branch) + LaurentSeries::monomial(q_[static_cast<std::size_t>(generator)], 1);
}

LaurentSeries EigenSystem::eigenvalue(const WordExponents& m, int branch) const {
  if (static_cast<int>(m.size()) != n_ - 1) throw DimensionError("word length differs from rank");
  LaurentSeries mu(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (std::labs(m[i]) <= max_power_) {
      mu = mu * powers_[static_cast<std::size_t>(branch - 1)][i][static_cast<std::size_t>(m[i] + max_power_)];
    } else {
      const LaurentSeries f = factor(branch, static_cast<int>(i) + 1);
      mu = mu * pow(f * f, m[i]);
    }
  }
  return mu;
}

LaurentSeries eigenvalue_of_word(const WordExponents& m, int branch, std::int64_t floor) {
  long bound = 0;
  for (long x : m) bound = std::max(bound, std::labs(x));
  const int n = static_cast<int>(m.size()) + 1;
  return EigenSystem(n, floor, std::min(bound, 1L)).eigenvalue(m, branch);
}

LeadingTerm leading_term_certificate(const EigenSystem& sys, const WordExponents& m) {
  const LaurentSeries mu = sys.eigenvalue(m, 1);
  LeadingTerm got{mu.leading(), mu.top()};
  if (!(got == predicted_leading_term(m)))
    throw ConstructionError("branch-1 leading term differs from prod p_i^(2 m_i) t^(2 sum m_i)");
  return got;
}

EigenData eigen_data(const EigenSystem& sys, int branch) {
  EigenData d;
  d.branch = branch;
  d.eigenvalue = sys.root(branch);
  LaurentSeries p(1);
  for (int k = 0; k < sys.n(); ++k) {
    d.eigenvector.push_back(p);
    p = p * d.eigenvalue;
  }
  return d;
}

Diagonalizer diagonalizer(const EigenSystem& sys) {
  const auto n = static_cast<std::size_t>(sys.n());
  Matrix<LaurentSeries> g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = eigen_data(sys, static_cast<int>(j) + 1).eigenvector;
    for (std::size_t k = 0; k < n; ++k) g(j, k) = v[k];
  }
  try {
    return {g, inverse(g)};
  } catch (const SingularMatrixError&) {
    throw PrecisionError("root Vandermonde is singular at stored precision");
  }
}

Diagonalizer diagonalizer(int n, std::int64_t floor) { return diagonalizer(EigenSystem(n, floor, 0)); }

Matrix<LaurentSeries> conjugate(const Diagonalizer& d, const Matrix<Poly>& x) {
  return d.g * to_laurent(x) * d.g_inv;
}

std::int64_t min_offdiagonal_valuation(const Matrix<LaurentSeries>& m) {
  std::int64_t v = kInfiniteValuation;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) v = std::min(v, valuation_lower_bound(m(i, j)));
  return v;
}

std::vector<std::int64_t> valuation_vector(const EigenSystem& sys, const WordExponents& m) {
  std::vector<std::int64_t> v;
  for (int j = 1; j <= sys.n(); ++j) v.push_back(valuation(sys.eigenvalue(m, j)));
  return v;
}

FixedPointCertificate fixes_no_point_certificate(const EigenSystem& sys, const WordExponents& m) {
  FixedPointCertificate cert;
  bool zero = true;
  for (long x : m) zero = zero && x == 0;
  if (zero) return cert;  // the identity fixes everything

  cert.leading = leading_term_certificate(sys, m);
  cert.leading_term_nontrivial = !(cert.leading.coefficient == 1 && cert.leading.exponent == 0);
  cert.status = CertificateStatus::Inconclusive;
  std::vector<LaurentSeries> mus;
  for (int j = 1; j <= sys.n(); ++j) {
    mus.push_back(sys.eigenvalue(m, j));
    cert.valuations.push_back(valuation(mus.back()));
  }
  // A nonzero valuation is the sturdier witness; the tail test is a fallback.
  for (int j = 1; j <= sys.n(); ++j) {
    const std::int64_t v = cert.valuations[static_cast<std::size_t>(j - 1)];
    if (v != 0) {
      cert.status = CertificateStatus::Certified;
      cert.branch = j;
      cert.valuation = v;
      cert.evidence = "valuation";
      return cert;
    }
  }
  for (int j = 1; j <= sys.n(); ++j)
    for (const auto& [e, c] : mus[static_cast<std::size_t>(j - 1)].terms())
      if (e < 0) {
        cert.status = CertificateStatus::Certified;
        cert.branch = j;
        cert.evidence = "tail";
        return cert;
      }
  return cert;
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Certified: return "certified";
    case CertificateStatus::NoCertificate: return "no-certificate";
    case CertificateStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace slzt::torus
