#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slzt/building.hpp"
#include "slzt/exact/laurent.hpp"
#include "slzt/exact/matrix.hpp"
#include "slzt/exact/poly.hpp"
#include "slzt/exact/ratfunc.hpp"
#include "slzt/sphere.hpp"
#include "slzt/torus.hpp"

namespace slzt::cycle {

/// Element of the unipotent radical: identity block, last column (u_1, ..., u_(n-1), 1).
/// The group law is addition of coordinates.
template <class R>
struct Unipotent {
  std::vector<R> coords;

  std::size_t n() const { return coords.size() + 1; }
  Matrix<R> matrix() const {
    auto m = Matrix<R>::identity(n());
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, n() - 1) = coords[i];
    return m;
  }
  friend Unipotent operator+(const Unipotent& a, const Unipotent& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionError("unipotent sizes differ");
    Unipotent s = a;
    for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] = s.coords[i] + b.coords[i];
    return s;
  }
  friend bool operator==(const Unipotent&, const Unipotent&) = default;
};

using UnipotentVector = Unipotent<LaurentSeries>;
using PolyUnipotent = Unipotent<Poly>;

// Reads the last column; DimensionError unless m has the unipotent shape.
template <class R>
Unipotent<R> unipotent_of(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (!m.square() || n < 2) throw DimensionError("not a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (!(m(i, j) == R(i == j ? 1 : 0))) throw DimensionError("matrix is not in the unipotent radical");
  if (!(m(n - 1, n - 1) == R(1))) throw DimensionError("matrix is not in the unipotent radical");
  Unipotent<R> u;
  for (std::size_t i = 0; i + 1 < n; ++i) u.coords.push_back(m(i, n - 1));
  return u;
}

/// u = u' u'' with u' over Q[t] (exponents >= 0, constants included) and
/// u'' strictly t^-1-small.
struct UnipotentSplit {
  PolyUnipotent poly;
  UnipotentVector small;
};
struct RationalUnipotentSplit {
  PolyUnipotent poly;
  Unipotent<RatFunc> small;
};

UnipotentSplit split_unipotent(const UnipotentVector& u);
RationalUnipotentSplit split_unipotent(const Unipotent<RatFunc>& u);

// Least common multiple of the coefficient denominators of the Q[t] part of
// a^-1 u a, where a is block diagonal with top-left a_prime.
BigInt ell_of(const Matrix<Poly>& a_prime, const UnipotentVector& u);
BigInt ell_of_coordinates(const PolyUnipotent& poly_part);

// a^-1 u a for a = diag(a_prime, 1): the coordinates become a_prime^-1 u.
UnipotentVector conjugate_by_inverse(const Matrix<Poly>& a_prime_inverse, const UnipotentVector& u);

/// Eigenvalue valuations of a word of A <= L, one per coordinate of SL_n,
/// last coordinate 0.
using TranslationVector = std::vector<std::int64_t>;

TranslationVector translation_vector(const torus::EigenSystem& rank_sys, const torus::WordExponents& m);
TranslationVector translation_vector(int n, const torus::WordExponents& m, std::int64_t floor);

// Rank over Q of a family of integer vectors.
std::size_t lattice_rank(const std::vector<std::vector<std::int64_t>>& vs);

struct CycleConfig {
  int n = 3;
  std::int64_t k = 1;
  std::optional<std::int64_t> k0;       // e = b^k0 y; default k + 2
  std::int64_t floor = -120;            // torus floor; deepened as needed
  std::optional<BigInt> ell;            // override of the product of ell(a, r_i)
};

// Vertices of g^-1 A are written by d_j = m_j - m_n, j = 1..n-1 (m_n = 0).
using DCoords = std::vector<std::int64_t>;

struct EllFactor {
  torus::WordExponents word;
  int wall = 0;
  BigInt value;
};

/// Everything the certificates need: the rank n-1 torus data, the apartment
/// g^-1 A with its vertices y, e, b^k e, the wall elements r_j, the sample of
/// the fundamental domain D_e, the finite set of words meeting sigma, and l.
class CycleSetup {
 public:
  explicit CycleSetup(const CycleConfig& cfg);

  int n() const { return n_; }
  int rank() const { return n_ - 1; }  // size of the L block
  std::int64_t k() const { return k_; }
  std::int64_t k0() const { return k0_; }
  std::int64_t floor() const { return floor_; }

  // The block g' of g = diag(g', 1) and its inverse.
  const Matrix<LaurentSeries>& g_prime() const { return g_prime_; }
  const Matrix<LaurentSeries>& g_prime_inverse() const { return g_prime_inv_; }
  // Generators a'_i of A as (n-1) x (n-1) matrices (empty for n = 2, 3 has one).
  const std::vector<Matrix<Poly>>& generators() const { return gens_; }
  const std::vector<TranslationVector>& generator_translations() const { return nu_basis_; }

  Matrix<Poly> word_block(const torus::WordExponents& m) const;
  Matrix<Poly> word_matrix(const torus::WordExponents& m) const;  // n x n
  TranslationVector translation(const torus::WordExponents& m) const;

  building::LatticeVertex vertex(const DCoords& d) const;
  DCoords b_power(const DCoords& d, std::int64_t k) const;

  std::int64_t y_level() const { return y_level_; }
  const DCoords& y() const { return y_; }
  const DCoords& e() const { return e_; }
  const DCoords& bke() const { return bke_; }
  const std::vector<std::int64_t>& wall_levels() const { return walls_; }
  const std::vector<UnipotentVector>& wall_elements() const { return r_; }

  const std::vector<DCoords>& de_sample() const { return de_sample_; }
  std::int64_t sigma_height() const;  // sum of d over V_e
  // Corners of sigma = {d <= w, sum d = H_e}.
  std::vector<DCoords> sigma_corners() const;
  const std::vector<torus::WordExponents>& domain_words() const { return domain_; }

  const BigInt& ell() const { return ell_; }
  bool ell_overridden() const { return ell_overridden_; }
  const std::vector<EllFactor>& ell_factors() const { return ell_factors_; }

 private:
  void build_torus(std::int64_t floor);
  std::vector<torus::WordExponents> enumerate_domain() const;

  int n_;
  std::int64_t k_, k0_, floor_;
  std::unique_ptr<torus::EigenSystem> sys_;
  std::vector<Matrix<Poly>> gens_;
  Matrix<LaurentSeries> g_prime_, g_prime_inv_;
  std::vector<TranslationVector> nu_basis_;
  std::int64_t y_level_ = 0;
  DCoords y_, e_, bke_;
  std::vector<std::int64_t> walls_;
  std::vector<UnipotentVector> r_;
  std::vector<DCoords> de_sample_;
  std::vector<torus::WordExponents> domain_;
  BigInt ell_ = 1;
  bool ell_overridden_ = false;
  std::vector<EllFactor> ell_factors_;
};

struct WallCheck {
  int wall = 0;
  bool fixes_bke = false;            // r_j b^k e = b^k e
  bool fixes_previous = false;       // r_j at b^(k-1) e, the y side of the wall
  bool fixes_next = false;           // r_j at b^(k+1) e
  bool fixes_y = false;
  bool power_same_wall = false;      // r_j^l fixes b^k e and not b^(k-1) e
};

WallCheck check_wall(const CycleSetup& s, int j);

struct PowerIdentityCheck {
  torus::WordExponents word;
  int wall = 0;
  bool holds = false;
  bool integral = false;
};

// (a^-1 r_j^l a)' against ((a^-1 r_j a)')^l, both by repeated squaring.
PowerIdentityCheck check_power_identity(const CycleSetup& s, const torus::WordExponents& a, int j);

struct VertexCheck {
  DCoords vertex;
  bool fixed = false;
};

struct MembershipCertificate {
  std::vector<int> subset;  // 1-based wall indices
  torus::WordExponents word;
  Matrix<Poly> gamma;
  UnipotentVector residual;
  std::vector<VertexCheck> checked;
  bool integral = false;
  bool det_one = false;
  bool residual_small = false;
  bool rescaling_identity = false;  // gamma = a ((a^-1 prod_S r_j a)')^l
  bool recomposes = false;          // a^-1 u a = u' u''

  bool valid() const;
};

std::vector<MembershipCertificate> membership_certificates(const CycleSetup& s);
MembershipCertificate membership_certificate(const CycleSetup& s, const std::vector<int>& subset,
                                             const torus::WordExponents& a);

}  // namespace slzt::cycle
