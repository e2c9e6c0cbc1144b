#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slzt/exact/rational.hpp"

namespace slzt::cycle {

/// Integer homology group Z^rank + sum Z/d for d in torsion.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& h);

// Diagonal of the Smith normal form, zeros dropped.
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> m);

/// The unit ball of R^(n-1) cut by the coordinate hyperplanes, as a simplicial
/// complex: the cone from the centre O over the boundary of the
/// cross-polytope on +-e_1, ..., +-e_(n-1).
///
/// Vertex 0 is O (the cell holding b^k e); vertex 2i-1 is +e_i and 2i is -e_i.
/// A simplex is a sign-consistent set of axis vertices, with or without O.
/// Top cells are labelled by the subset S of axes with the negative sign,
/// i.e. by which r_j^l were applied. The boundary sphere omega consists of the
/// simplices that avoid O.
class SphereComplex {
 public:
  using Simplex = std::vector<int>;  // sorted vertex ids

  SphereComplex(int n, BigInt ell, std::int64_t k);

  int n() const { return n_; }
  const BigInt& ell() const { return ell_; }
  std::int64_t k() const { return k_; }
  int dimension() const { return n_ - 1; }
  static constexpr int kCentre = 0;

  // Cells of the ball in dimension d, in a fixed order.
  const std::vector<Simplex>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
  // Whether a cell lies on the boundary sphere.
  static bool on_sphere(const Simplex& s) { return s.empty() || s.front() != kCentre; }
  // Subset label (1-based axes with negative sign) of a top cell.
  std::vector<int> label(const Simplex& top) const;

  // Boundary map from dimension d to d - 1 (rows: (d-1)-cells, cols: d-cells).
  std::vector<std::vector<BigInt>> boundary(int d, bool sphere_only) const;

  HomologyGroup homology(int d, bool sphere_only) const;
  // Reduced homology: rank in degree 0 lowered by one.
  HomologyGroup reduced_homology(int d, bool sphere_only) const;
  std::int64_t euler_characteristic(bool sphere_only) const;
  bool boundary_squares_to_zero() const;

  // Signs on the top cells making the ball a relative cycle, found by
  // walking across shared faces; empty if no consistent choice exists.
  std::vector<int> fundamental_signs() const;
  // Boundary of the signed top-cell chain, indexed like cells(n-2).
  std::vector<BigInt> boundary_of_fundamental_chain() const;

  // The centre appears in no boundary cell and every top cell contains it.
  bool centre_is_interior() const;

  std::vector<Simplex> sphere_cells(int d) const;

 private:
  int n_;
  BigInt ell_;
  std::int64_t k_;
  std::vector<std::vector<Simplex>> cells_;
};

}  // namespace slzt::cycle
