#include "slzt/sphere.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slzt::cycle {

std::string to_string(const HomologyGroup& h) {
  std::ostringstream os;
  bool first = true;
  if (h.rank > 0) {
    os << "Z";
    if (h.rank > 1) os << "^" << h.rank;
    first = false;
  }
  for (const auto& d : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and redo.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m[i][j] % m[t][t]) != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            clean = false;
            break;
          }
    }
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

SphereComplex::SphereComplex(int n, BigInt ell, std::int64_t k) : n_(n), ell_(std::move(ell)), k_(k) {
  if (n < 2) throw std::invalid_argument("sphere complex needs n >= 2");
  if (ell_ < 1) throw std::invalid_argument("sphere complex needs l >= 1");
  if (k < 1) throw std::invalid_argument("sphere complex needs k >= 1");
  const int axes = n - 1;
  cells_.resize(static_cast<std::size_t>(n));
  // Each axis is absent, +, or -; then with or without the centre.
  int combos = 1;
  for (int i = 0; i < axes; ++i) combos *= 3;
  for (int code = 0; code < combos; ++code) {
    Simplex base;
    int c = code;
    for (int i = 1; i <= axes; ++i, c /= 3) {
      if (c % 3 == 1) base.push_back(2 * i - 1);
      if (c % 3 == 2) base.push_back(2 * i);
    }
    for (int with_centre = 0; with_centre < 2; ++with_centre) {
      Simplex s = base;
      if (with_centre) s.insert(s.begin(), kCentre);
      if (s.empty()) continue;
      cells_[s.size() - 1].push_back(s);
    }
  }
  for (auto& level : cells_) std::sort(level.begin(), level.end());
}

std::vector<int> SphereComplex::label(const Simplex& top) const {
  std::vector<int> s;
  for (int v : top)
    if (v != kCentre && v % 2 == 0) s.push_back(v / 2);
  return s;
}

std::vector<SphereComplex::Simplex> SphereComplex::sphere_cells(int d) const {
  std::vector<Simplex> out;
  if (d < 0 || d >= n_) return out;
  for (const auto& s : cells(d))
    if (on_sphere(s)) out.push_back(s);
  return out;
}

std::vector<std::vector<BigInt>> SphereComplex::boundary(int d, bool sphere_only) const {
  auto pick = [&](int dim) { return sphere_only ? sphere_cells(dim) : (dim >= 0 && dim < n_ ? cells(dim) : std::vector<Simplex>{}); };
  const auto hi = pick(d), lo = pick(d - 1);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
  std::vector<std::vector<BigInt>> m(lo.size(), std::vector<BigInt>(hi.size(), BigInt(0)));
  if (d <= 0) return m;
  for (std::size_t j = 0; j < hi.size(); ++j)
    for (std::size_t drop = 0; drop < hi[j].size(); ++drop) {
      Simplex face = hi[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto it = index.find(face);
      if (it == index.end()) throw std::logic_error("face missing from complex");
      m[it->second][j] += drop % 2 == 0 ? 1 : -1;
    }
  return m;
}

namespace {
std::size_t matrix_rank(const std::vector<std::vector<BigInt>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  return smith_invariants(m).size();
}
}  // namespace

HomologyGroup SphereComplex::homology(int d, bool sphere_only) const {
  HomologyGroup h;
  const std::size_t cd = sphere_only ? sphere_cells(d).size()
                                     : (d >= 0 && d < n_ ? cells(d).size() : 0);
  const std::size_t r_in = d >= 1 ? matrix_rank(boundary(d, sphere_only)) : 0;
  std::size_t r_out = 0;
  if (d + 1 < n_) {
    const auto b = boundary(d + 1, sphere_only);
    if (!b.empty() && !b[0].empty()) {
      const auto inv = smith_invariants(b);
      r_out = inv.size();
      for (const auto& x : inv)
        if (x > 1) h.torsion.push_back(x);
    }
  }
  h.rank = cd - r_in - r_out;
  return h;
}

HomologyGroup SphereComplex::reduced_homology(int d, bool sphere_only) const {
  auto h = homology(d, sphere_only);
  if (d == 0 && h.rank > 0) --h.rank;
  return h;
}

std::int64_t SphereComplex::euler_characteristic(bool sphere_only) const {
  std::int64_t chi = 0;
  for (int d = 0; d < n_; ++d) {
    const auto c = static_cast<std::int64_t>(sphere_only ? sphere_cells(d).size() : cells(d).size());
    chi += d % 2 == 0 ? c : -c;
  }
  return chi;
}

bool SphereComplex::boundary_squares_to_zero() const {
  for (int sphere = 0; sphere < 2; ++sphere)
    for (int d = 2; d < n_; ++d) {
      const auto a = boundary(d - 1, sphere), b = boundary(d, sphere);
      if (a.empty() || b.empty() || b[0].empty()) continue;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
          BigInt s = 0;
          for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
          if (sgn(s) != 0) return false;
        }
    }
  return true;
}

std::vector<int> SphereComplex::fundamental_signs() const {
  const int top = n_ - 1;
  const auto& tops = cells(top);
  const auto b = boundary(top, false);
  const auto& faces = cells(top - 1);
  std::vector<int> sign(tops.size(), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (sgn(b[f][a]) == 0 || on_sphere(faces[f])) continue;
      for (std::size_t c = 0; c < tops.size(); ++c) {
        if (c == a || sgn(b[f][c]) == 0) continue;
        // Coefficients on the shared interior face must cancel.
        const int want = -sign[a] * b[f][a].get_si() * b[f][c].get_si();
        if (sign[c] == 0) {
          sign[c] = want;
          queue.push_back(c);
        } else if (sign[c] != want) {
          return {};
        }
      }
    }
  }
  for (int s : sign)
    if (s == 0) return {};
  return sign;
}

std::vector<BigInt> SphereComplex::boundary_of_fundamental_chain() const {
  const int top = n_ - 1;
  const auto sign = fundamental_signs();
  const auto b = boundary(top, false);
  std::vector<BigInt> out(b.size(), BigInt(0));
  if (sign.empty()) return out;
  for (std::size_t f = 0; f < b.size(); ++f)
    for (std::size_t c = 0; c < sign.size(); ++c) out[f] += b[f][c] * sign[c];
  return out;
}

bool SphereComplex::centre_is_interior() const {
  for (int d = 0; d < n_; ++d)
    for (const auto& s : sphere_cells(d))
      if (std::find(s.begin(), s.end(), kCentre) != s.end()) return false;
  for (const auto& s : cells(n_ - 1))
    if (s.front() != kCentre) return false;
  return true;
}

}  // namespace slzt::cycle
