#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "slzt/exact/laurent.hpp"
#include "slzt/exact/matrix.hpp"
#include "slzt/exact/poly.hpp"

namespace slzt::building {

/// Vertex D(t^m1, ..., t^mn) x0 of the standard apartment, up to homothety.
/// Canonical form has minimum exponent 0.
struct ApartmentVertex {
  std::vector<std::int64_t> m;

  static ApartmentVertex canonical(std::vector<std::int64_t> exponents);
  std::size_t n() const { return m.size(); }
  friend bool operator==(const ApartmentVertex&, const ApartmentVertex&) = default;
  friend auto operator<=>(const ApartmentVertex&, const ApartmentVertex&) = default;
};

std::string to_string(const ApartmentVertex& v);

/// The lattice spanned by the columns of `basis`. The inverse is kept alongside
/// because every membership test needs it.
class LatticeVertex {
 public:
  static LatticeVertex from_apartment(const ApartmentVertex& v);
  // Inverse taken to `floor` when det(basis) is not a monomial.
  static LatticeVertex from_basis(Matrix<LaurentSeries> basis, std::int64_t floor);
  // Caller vouches that basis * inverse = 1 within `floor`.
  static LatticeVertex from_pair(Matrix<LaurentSeries> basis, Matrix<LaurentSeries> inverse,
                                 std::int64_t floor);
  static LatticeVertex origin(std::size_t n);

  std::size_t n() const { return basis_.rows(); }
  const Matrix<LaurentSeries>& basis() const { return basis_; }
  const Matrix<LaurentSeries>& basis_inverse() const { return basis_inv_; }
  std::int64_t floor() const { return floor_; }

  // h applied to the lattice.
  LatticeVertex translated(const Matrix<LaurentSeries>& h) const;

 private:
  LatticeVertex(Matrix<LaurentSeries> b, Matrix<LaurentSeries> b_inv, std::int64_t floor)
      : basis_(std::move(b)), basis_inv_(std::move(b_inv)), floor_(floor) {}

  Matrix<LaurentSeries> basis_;
  Matrix<LaurentSeries> basis_inv_;
  std::int64_t floor_;
};

// Same lattice class: after scaling a^-1 b to minimum valuation 0 its
// determinant must be a unit.
bool same_vertex(const LatticeVertex& a, const LatticeVertex& b);

// All entries of B^-1 g B have valuation >= 0. PrecisionError when some entry
// cannot be decided at the stored floor.
bool fixes_vertex(const Matrix<LaurentSeries>& g, const LatticeVertex& v);
bool fixes_vertex(const Matrix<Poly>& g, const LatticeVertex& v);

// Smallest guaranteed valuation among entries of B^-1 g B.
std::int64_t conjugated_min_valuation(const Matrix<LaurentSeries>& g, const LatticeVertex& v);

/// Degree bounds N_ij = m_i - m_j for a polynomial matrix to stabilize the
/// apartment vertex; kZeroEntry forces the entry to vanish.
struct StabilizerShape {
  static constexpr std::int64_t kZeroEntry = -1;
  std::vector<std::vector<std::int64_t>> bound;

  bool contains(const Matrix<Poly>& g) const;
};

StabilizerShape stabilizer_degree_bounds(const ApartmentVertex& v);

bool sector_contains(const ApartmentVertex& v);

// The element b = D(t, ..., t, t^-(n-1)) and its powers.
Matrix<LaurentSeries> b_matrix(std::size_t n, std::int64_t k = 1);
ApartmentVertex b_translate(const ApartmentVertex& v, std::int64_t k);

// E_ij(c): identity plus c at (i, j), 1-based.
template <class R>
Matrix<R> elementary(std::size_t n, std::size_t i, std::size_t j, const R& c) {
  Matrix<R> e = Matrix<R>::identity(n);
  e(i - 1, j - 1) = c;
  return e;
}

// Valuation of entry (j, n) of b^-k E_jn(1) b^k minus that of E_jn(1).
std::int64_t contraction_profile(std::size_t n, std::size_t j, std::int64_t k);

/// Subset I of {1..n} naming the subspace V_I = span{e_i : i in I} at infinity.
using ParabolicVertex = std::set<int>;

// Whether E_in(1) maps V_I into itself, decided by a rank computation.
bool boundary_action(std::size_t n, std::size_t i, const ParabolicVertex& I);

// What the rank computation should reproduce: n in I implies i in I.
bool boundary_rule(std::size_t n, std::size_t i, const ParabolicVertex& I);

struct CombinatoricsReport {
  std::size_t n = 0;
  std::size_t vertex_count = 0;          // proper nonempty subsets of {1..n}
  std::size_t fixed_count = 0;           // fixed by every R_i
  std::size_t maximal_chains = 0;        // in the fixed poset
  std::size_t max_chain_length = 0;
  bool closed_under_subsets = false;
  bool fixed_set_is_subdivided_simplex = false;
  bool rule_matches = false;             // boundary_action == boundary_rule everywhere
  bool facets_ok = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CombinatoricsReport verify_M_combinatorics(std::size_t n);

}  // namespace slzt::building
