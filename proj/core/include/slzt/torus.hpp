#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slzt/exact/laurent.hpp"
#include "slzt/exact/matrix.hpp"
#include "slzt/exact/poly.hpp"

namespace slzt::torus {

// Multiplication by x on Z[t][x]/(f) in the basis 1, x, ..., x^(n-1).
// Column j holds the coordinates of x * x^j.
Matrix<Poly> companion_matrix(const XPoly& f);
Matrix<Poly> companion_matrix(int n);

// p(M) for a polynomial in x with Z[t] coefficients.
Matrix<Poly> evaluate_at(const XPoly& p, const Matrix<Poly>& m);

/// The commuting generators a_i = (C_f + q_(i+1) t I)^2, i = 1..n-1.
///
/// Each unsquared factor C_f + q t I has determinant (-1)^(n+1); squaring
/// lands every generator in SL_n(Z[t]).
struct TorusGenerators {
  int n = 0;
  XPoly f;
  Matrix<Poly> companion;
  std::vector<Matrix<Poly>> factors;     // C_f + q_i t I for i = 1..n
  std::vector<Matrix<Poly>> generators;  // a_1 .. a_(n-1)
};

// Throws ConstructionError if some det a_i != 1.
TorusGenerators make_generators(int n);

using WordExponents = std::vector<long>;

// prod_i a_i^(m_i); negative powers through the adjugate (det a_i = 1).
Matrix<Poly> word_matrix(const TorusGenerators& gens, const WordExponents& m);

// All words with |m_i| <= bound, in lexicographic order, zero word excluded.
std::vector<WordExponents> nonzero_words(int rank, long bound);

struct LeadingTerm {
  BigRational coefficient;
  std::int64_t exponent = 0;
  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

// prod p_i^(2 m_i) t^(2 sum m_i): what unique factorization predicts.
LeadingTerm predicted_leading_term(const WordExponents& m);

/// Laurent expansions of all n roots, with the squared factors
/// (alpha_j + q_(i+1) t)^2 and their powers up to `max_power` precomputed.
/// Immutable after construction.
class EigenSystem {
 public:
  EigenSystem(int n, std::int64_t floor, long max_power = 3);

  int n() const { return n_; }
  std::int64_t floor() const { return floor_; }
  const std::vector<long>& q() const { return q_; }

  // 1-based branch.
  const LaurentSeries& root(int branch) const;
  const std::vector<LaurentSeries>& roots() const { return roots_; }

  // alpha_j + q t for the (1-based) generator index i, i.e. q = q_(i+1).
  LaurentSeries factor(int branch, int generator) const;

  // Eigenvalue of the word on the branch-j eigenline:
  // prod_i (alpha_j + q_(i+1) t)^(2 m_i).
  LaurentSeries eigenvalue(const WordExponents& m, int branch) const;

 private:
  int n_;
  std::int64_t floor_;
  long max_power_;
  std::vector<long> q_;
  std::vector<LaurentSeries> roots_;
  // [branch-1][generator-1][p + max_power]
  std::vector<std::vector<std::vector<LaurentSeries>>> powers_;
};

LaurentSeries eigenvalue_of_word(const WordExponents& m, int branch, std::int64_t floor);

// Leading term of the branch-1 eigenvalue; ConstructionError if it differs
// from predicted_leading_term(m).
LeadingTerm leading_term_certificate(const EigenSystem& sys, const WordExponents& m);

// Left eigenvector (1, alpha, ..., alpha^(n-1)) of C_f: v C_f = alpha v.
struct EigenData {
  int branch = 0;
  LaurentSeries eigenvalue;
  std::vector<LaurentSeries> eigenvector;
};

EigenData eigen_data(const EigenSystem& sys, int branch);

/// Rows are the left eigenvectors of C_f, so g C_f g^-1 is diagonal.
/// Not normalized to determinant one; conjugation does not see scalars.
struct Diagonalizer {
  Matrix<LaurentSeries> g;
  Matrix<LaurentSeries> g_inv;
};

Diagonalizer diagonalizer(const EigenSystem& sys);
Diagonalizer diagonalizer(int n, std::int64_t floor);

Matrix<LaurentSeries> conjugate(const Diagonalizer& d, const Matrix<Poly>& x);

// Smallest guaranteed valuation among off-diagonal entries.
std::int64_t min_offdiagonal_valuation(const Matrix<LaurentSeries>& m);

// val of each branch eigenvalue, branch order.
std::vector<std::int64_t> valuation_vector(const EigenSystem& sys, const WordExponents& m);

enum class CertificateStatus { Certified, NoCertificate, Inconclusive };

/// Evidence that a word of A fixes no point of the building: some eigenvalue
/// is not a rational constant. Bounded subgroups only have eigenvalues
/// algebraic over Q, and Q((1/t)) meets the algebraic closure of Q in Q.
struct FixedPointCertificate {
  CertificateStatus status = CertificateStatus::NoCertificate;
  int branch = 0;
  std::int64_t valuation = 0;
  std::string evidence;  // "valuation" or "tail"
  std::vector<std::int64_t> valuations;
  LeadingTerm leading;
  // (prod p_i^(2 m_i), 2 sum m_i) != (1, 0); must hold for every nonzero word.
  bool leading_term_nontrivial = false;
};

FixedPointCertificate fixes_no_point_certificate(const EigenSystem& sys, const WordExponents& m);

std::string to_string(CertificateStatus s);

}  // namespace slzt::torus
