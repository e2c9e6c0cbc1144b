#include "slzt/cycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "slzt/rootlift.hpp"

namespace slzt::cycle {

namespace {

using torus::WordExponents;
using L = LaurentSeries;

std::int64_t max_degree(const Matrix<Poly>& m) {
  std::int64_t d = 0;
  for (const auto& p : m.entries()) d = std::max<std::int64_t>(d, p.degree());
  return d;
}

WordExponents negated(WordExponents m) {
  for (auto& x : m) x = -x;
  return m;
}

Matrix<L> block_diag(const Matrix<L>& top_left) { return embed_top_left(top_left, top_left.rows() + 1); }

UnipotentVector scaled(const UnipotentVector& u, const BigInt& s) {
  UnipotentVector out;
  for (const auto& c : u.coords) out.coords.push_back(c.scaled(BigRational(s)));
  return out;
}

UnipotentVector zero_unipotent(std::size_t coords) {
  UnipotentVector u;
  u.coords.assign(coords, L());
  return u;
}

}  // namespace

UnipotentSplit split_unipotent(const UnipotentVector& u) {
  UnipotentSplit s;
  for (const auto& c : u.coords) {
    s.poly.coords.push_back(c.polynomial_part());
    s.small.coords.push_back(c.fractional_part());
  }
  return s;
}

RationalUnipotentSplit split_unipotent(const Unipotent<RatFunc>& u) {
  RationalUnipotentSplit s;
  for (const auto& c : u.coords) {
    auto [p, r] = c.split_at_infinity();
    s.poly.coords.push_back(std::move(p));
    s.small.coords.push_back(std::move(r));
  }
  return s;
}

BigInt ell_of_coordinates(const PolyUnipotent& poly_part) {
  BigInt l = 1;
  for (const auto& p : poly_part.coords) l = lcm(l, denominator_lcm(p));
  return l;
}

UnipotentVector conjugate_by_inverse(const Matrix<Poly>& a_prime_inverse, const UnipotentVector& u) {
  const std::size_t r = a_prime_inverse.rows();
  if (u.coords.size() != r) throw DimensionError("unipotent size differs from the L block");
  UnipotentVector out = zero_unipotent(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (!a_prime_inverse(i, k).zero() && !u.coords[k].exact_zero())
        out.coords[i] += L::from_poly(a_prime_inverse(i, k)) * u.coords[k];
  return out;
}

BigInt ell_of(const Matrix<Poly>& a_prime, const UnipotentVector& u) {
  return ell_of_coordinates(split_unipotent(conjugate_by_inverse(inverse(a_prime), u)).poly);
}

TranslationVector translation_vector(const torus::EigenSystem& rank_sys, const WordExponents& m) {
  TranslationVector nu;
  bool zero = true;
  for (long x : m) zero = zero && x == 0;
  if (zero) {
    nu.assign(static_cast<std::size_t>(rank_sys.n()) + 1, 0);
    return nu;
  }
  nu = torus::valuation_vector(rank_sys, m);
  nu.push_back(0);
  return nu;
}

TranslationVector translation_vector(int n, const WordExponents& m, std::int64_t floor) {
  if (n < 2) throw std::invalid_argument("translation_vector: n must be >= 2");
  if (static_cast<int>(m.size()) != std::max(n - 2, 0)) throw DimensionError("word length differs from rank of A");
  if (n == 2) return TranslationVector(2, 0);
  return translation_vector(torus::EigenSystem(n - 1, floor, 1), m);
}

std::size_t lattice_rank(const std::vector<std::vector<std::int64_t>>& vs) {
  if (vs.empty()) return 0;
  std::vector<std::vector<BigRational>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  std::size_t r = 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (is_zero(m[i][c])) continue;
      const BigRational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

CycleSetup::CycleSetup(const CycleConfig& cfg) : n_(cfg.n), k_(cfg.k) {
  if (n_ < 2) throw std::invalid_argument("cycle setup needs n >= 2");
  if (k_ < 1) throw std::invalid_argument("cycle setup needs k >= 1");
  k0_ = cfg.k0.value_or(k_ + 2);
  if (k0_ < 0) throw std::invalid_argument("k0 must be >= 0");
  const int r = rank();

  // Valuations and the basepoint only need a modest precision.
  build_torus(r >= 2 ? std::min(cfg.floor, rootlift::default_floor(r)) : cfg.floor);

  // y: the first vertex (c, ..., c) of g^-1 A fixed by every E_in(1), hence by
  // the Q[[1/t]]-points of the unipotent radical.
  bool found = false;
  for (std::int64_t c = 0; c <= 64 && !found; ++c) {
    const DCoords d(static_cast<std::size_t>(r), c);
    const auto v = vertex(d);
    bool all = true;
    for (int i = 1; i <= r && all; ++i)
      all = building::fixes_vertex(building::elementary<L>(static_cast<std::size_t>(n_), static_cast<std::size_t>(i),
                                                           static_cast<std::size_t>(n_), L(1)),
                                   v);
    if (all) {
      y_level_ = c;
      y_ = d;
      found = true;
    }
  }
  if (!found) throw ConstructionError("no basepoint y fixed by the integral unipotent radical");
  e_ = b_power(y_, k0_);
  bke_ = b_power(e_, k_);
  walls_ = bke_;

  // Corners of the parallelotope e - sum eps_i nu(a_i), then the barycentre.
  const std::size_t gens = nu_basis_.size();
  for (unsigned mask = 0; mask < (1U << gens); ++mask) {
    DCoords d = e_;
    for (std::size_t i = 0; i < gens; ++i)
      if (mask >> i & 1U)
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= nu_basis_[i][j];
    if (std::find(de_sample_.begin(), de_sample_.end(), d) == de_sample_.end()) de_sample_.push_back(d);
  }
  {
    DCoords twice(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) {
      twice[j] = 2 * e_[j];
      for (const auto& nu : nu_basis_) twice[j] -= nu[j];
    }
    DCoords bary(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) bary[j] = twice[j] >= 0 ? twice[j] / 2 : -((-twice[j] + 1) / 2);
    if (std::find(de_sample_.begin(), de_sample_.end(), bary) == de_sample_.end()) de_sample_.push_back(bary);
  }

  domain_ = enumerate_domain();

  // Working floor: room for the wall exponents, the vertex shifts and the
  // degrees of the words in the domain.
  std::int64_t w_max = 0, d_max = 0, deg_max = 0;
  for (auto w : walls_) w_max = std::max(w_max, w);
  for (const auto& d : de_sample_)
    for (auto x : d) d_max = std::max(d_max, x);
  for (auto x : b_power(bke_, 1)) d_max = std::max(d_max, x);
  for (const auto& m : domain_) {
    deg_max = std::max(deg_max, max_degree(word_block(m)));
    deg_max = std::max(deg_max, max_degree(word_block(negated(m))));
  }
  const std::int64_t need = -(w_max + d_max + deg_max + 10 * n_ + 40);
  floor_ = std::min(cfg.floor, need);
  if (r >= 2) build_torus(floor_);

  for (int j = 1; j <= r; ++j) {
    UnipotentVector u;
    for (int i = 1; i <= r; ++i)
      u.coords.push_back(g_prime_inv_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))
                             .shifted(walls_[static_cast<std::size_t>(j - 1)]));
    r_.push_back(std::move(u));
  }

  if (cfg.ell) {
    if (*cfg.ell < 1) throw std::invalid_argument("ell must be >= 1");
    ell_ = *cfg.ell;
    ell_overridden_ = true;
  }
  for (const auto& m : domain_) {
    const auto a_inv = word_block(negated(m));
    for (int j = 1; j <= r; ++j) {
      const auto conj = conjugate_by_inverse(a_inv, r_[static_cast<std::size_t>(j - 1)]);
      EllFactor f{m, j, ell_of_coordinates(split_unipotent(conj).poly)};
      if (!ell_overridden_) ell_ *= f.value;
      ell_factors_.push_back(std::move(f));
    }
  }
}

void CycleSetup::build_torus(std::int64_t floor) {
  const int r = rank();
  if (r < 2) {
    g_prime_ = Matrix<L>::identity(1);
    g_prime_inv_ = g_prime_;
    return;
  }
  sys_ = std::make_unique<torus::EigenSystem>(r, floor, 1);
  const auto d = torus::diagonalizer(*sys_);
  g_prime_ = d.g;
  g_prime_inv_ = d.g_inv;
  gens_ = torus::make_generators(r).generators;
  nu_basis_.clear();
  for (int i = 0; i < r - 1; ++i) {
    WordExponents m(static_cast<std::size_t>(r - 1), 0);
    m[static_cast<std::size_t>(i)] = 1;
    nu_basis_.push_back(translation_vector(*sys_, m));
  }
}

Matrix<Poly> CycleSetup::word_block(const WordExponents& m) const {
  const auto r = static_cast<std::size_t>(rank());
  if (m.size() != gens_.size()) throw DimensionError("word length differs from rank of A");
  auto w = Matrix<Poly>::identity(r);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) w = w * power(gens_[i], m[i]);
  return w;
}

Matrix<Poly> CycleSetup::word_matrix(const WordExponents& m) const {
  return embed_top_left(word_block(m), static_cast<std::size_t>(n_));
}

TranslationVector CycleSetup::translation(const WordExponents& m) const {
  if (m.size() != nu_basis_.size()) throw DimensionError("word length differs from rank of A");
  TranslationVector nu(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) nu[j] += m[i] * nu_basis_[i][j];
  return nu;
}

building::LatticeVertex CycleSetup::vertex(const DCoords& d) const {
  const auto r = static_cast<std::size_t>(rank());
  if (d.size() != r) throw DimensionError("vertex coordinates differ from n - 1");
  const auto n = static_cast<std::size_t>(n_);
  // basis g^-1 D(t^m), inverse D(t^-m) g, with m = (d, 0).
  auto basis = block_diag(g_prime_inv_);
  auto inv = block_diag(g_prime_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      basis(i, j) = basis(i, j).shifted(d[j]);
      inv(j, i) = inv(j, i).shifted(-d[j]);
    }
  return building::LatticeVertex::from_pair(std::move(basis), std::move(inv), floor_);
}

DCoords CycleSetup::b_power(const DCoords& d, std::int64_t k) const {
  DCoords out = d;
  for (auto& x : out) x += k * n_;
  return out;
}

std::int64_t CycleSetup::sigma_height() const {
  std::int64_t h = 0;
  for (auto x : e_) h += x;
  return h;
}

std::vector<DCoords> CycleSetup::sigma_corners() const {
  // sigma = {d <= w, sum d = H}: corner j puts the whole deficit on coordinate j.
  std::int64_t wsum = 0;
  for (auto w : walls_) wsum += w;
  const std::int64_t deficit = wsum - sigma_height();
  std::vector<DCoords> out;
  for (std::size_t j = 0; j < walls_.size(); ++j) {
    DCoords c = walls_;
    c[j] -= deficit;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<WordExponents> CycleSetup::enumerate_domain() const {
  const std::size_t g = nu_basis_.size();
  if (g == 0) return {WordExponents{}};
  const std::size_t r = static_cast<std::size_t>(rank());

  // Boxes in d-coordinates.
  std::vector<std::int64_t> de_lo(r, INT64_MAX), de_hi(r, INT64_MIN);
  for (const auto& d : de_sample_)
    for (std::size_t j = 0; j < r; ++j) de_lo[j] = std::min(de_lo[j], d[j]), de_hi[j] = std::max(de_hi[j], d[j]);
  std::int64_t wsum = 0;
  for (auto w : walls_) wsum += w;
  std::int64_t step = 0;
  for (const auto& nu : nu_basis_)
    for (std::size_t j = 0; j < r; ++j) step = std::max(step, std::abs(nu[j]));
  std::vector<std::int64_t> lo(r), hi(r);  // admissible nu(m)_j
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t sig_lo = sigma_height() - (wsum - walls_[j]);
    const std::int64_t sig_hi = walls_[j];
    lo[j] = de_lo[j] - sig_hi - step;
    hi[j] = de_hi[j] - sig_lo + step;
  }

  // Bound |m_i| through an invertible g x g block of the translation matrix.
  std::vector<std::size_t> rows;
  Matrix<BigRational> inv;
  std::vector<std::size_t> pick(g);
  for (std::size_t i = 0; i < g; ++i) pick[i] = i;
  while (true) {
    Matrix<BigRational> blk(g, g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) blk(a, b) = nu_basis_[b][pick[a]];
    if (!is_zero(det(blk))) {
      inv = inverse(blk);
      rows = pick;
      break;
    }
    // next combination of g rows out of r
    std::size_t i = g;
    while (i > 0 && pick[i - 1] == r - g + i - 1) --i;
    if (i == 0) throw ConstructionError("translation vectors of A do not span a lattice of full rank");
    ++pick[i - 1];
    for (std::size_t j = i; j < g; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<std::int64_t> bound(g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    BigRational b = 0;
    for (std::size_t a = 0; a < g; ++a)
      b += abs(inv(i, a)) * BigRational(static_cast<long>(std::max(std::abs(lo[rows[a]]), std::abs(hi[rows[a]]))));
    const BigInt c = (b.get_num() + b.get_den() - 1) / b.get_den();
    bound[i] = c.get_si();
  }

  std::vector<WordExponents> out;
  WordExponents m(g);
  for (std::size_t i = 0; i < g; ++i) m[i] = -bound[i];
  while (true) {
    const auto nu = translation(m);
    bool ok = true;
    for (std::size_t j = 0; j < r && ok; ++j) ok = nu[j] >= lo[j] && nu[j] <= hi[j];
    if (ok) out.push_back(m);
    std::size_t i = g;
    while (i > 0 && m[i - 1] == bound[i - 1]) {
      m[i - 1] = -bound[i - 1];
      --i;
    }
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

WallCheck check_wall(const CycleSetup& s, int j) {
  if (j < 1 || j > s.rank()) throw std::out_of_range("wall index out of range");
  const auto& r = s.wall_elements()[static_cast<std::size_t>(j - 1)];
  const auto m = r.matrix();
  WallCheck c;
  c.wall = j;
  c.fixes_bke = building::fixes_vertex(m, s.vertex(s.bke()));
  c.fixes_previous = building::fixes_vertex(m, s.vertex(s.b_power(s.bke(), -1)));
  c.fixes_next = building::fixes_vertex(m, s.vertex(s.b_power(s.bke(), 1)));
  c.fixes_y = building::fixes_vertex(m, s.vertex(s.y()));
  const auto rl = scaled(r, s.ell()).matrix();
  c.power_same_wall = building::fixes_vertex(rl, s.vertex(s.bke())) &&
                      !building::fixes_vertex(rl, s.vertex(s.b_power(s.bke(), -1)));
  return c;
}

PowerIdentityCheck check_power_identity(const CycleSetup& s, const WordExponents& a, int j) {
  PowerIdentityCheck c;
  c.word = a;
  c.wall = j;
  const auto& r = s.wall_elements().at(static_cast<std::size_t>(j - 1));
  const auto a_inv = s.word_matrix(negated(a));
  const auto a_full = s.word_matrix(a);

  // Only exponents down to -deg(a^-1) can reach the polynomial part.
  UnipotentVector cut;
  const std::int64_t keep = -(max_degree(a_inv) + 1);
  for (const auto& x : r.coords) cut.coords.push_back(x.is_exact() || x.floor() < keep ? x.truncated(keep) : x);

  const auto lhs_full = to_laurent(a_inv) * power(cut.matrix(), s.ell()) * to_laurent(a_full);
  const auto lhs = split_unipotent(unipotent_of(lhs_full)).poly;

  const auto once = split_unipotent(conjugate_by_inverse(s.word_block(negated(a)), r)).poly;
  const auto rhs = power(once.matrix(), s.ell());
  c.holds = lhs.matrix() == rhs;
  c.integral = is_integral(rhs);
  return c;
}

bool MembershipCertificate::valid() const {
  if (!(integral && det_one && residual_small && rescaling_identity && recomposes)) return false;
  for (const auto& v : checked)
    if (!v.fixed) return false;
  return true;
}

MembershipCertificate membership_certificate(const CycleSetup& s, const std::vector<int>& subset,
                                             const WordExponents& a) {
  MembershipCertificate cert;
  cert.subset = subset;
  cert.word = a;
  const std::size_t r = static_cast<std::size_t>(s.rank());
  const auto a_inv = s.word_block(negated(a));

  UnipotentVector prod = zero_unipotent(r);
  for (int j : subset) prod = prod + s.wall_elements().at(static_cast<std::size_t>(j - 1));
  const UnipotentVector prod_l = scaled(prod, s.ell());

  const auto x = conjugate_by_inverse(a_inv, prod_l);
  const auto split = split_unipotent(x);
  cert.gamma = s.word_matrix(a) * split.poly.matrix();
  cert.residual = split.small;
  cert.integral = is_integral(cert.gamma);
  cert.det_one = det(cert.gamma) == Poly(1);

  cert.residual_small = true;
  for (const auto& c : split.small.coords)
    if (!c.exact_zero() && valuation_lower_bound(c) < 1) cert.residual_small = false;

  const auto once = split_unipotent(conjugate_by_inverse(a_inv, prod)).poly;
  cert.rescaling_identity = cert.gamma == s.word_matrix(a) * power(once.matrix(), s.ell());

  const auto recomposed = to_laurent(split.poly.matrix()) * split.small.matrix();
  const auto direct = x.matrix();
  cert.recomposes = true;
  for (std::size_t i = 0; i < direct.rows(); ++i)
    for (std::size_t j = 0; j < direct.cols(); ++j)
      if (!recomposed(i, j).agrees_with(direct(i, j))) cert.recomposes = false;

  const auto small = split.small.matrix();
  for (const auto& d : s.de_sample()) cert.checked.push_back({d, building::fixes_vertex(small, s.vertex(d))});
  return cert;
}

std::vector<MembershipCertificate> membership_certificates(const CycleSetup& s) {
  std::vector<MembershipCertificate> out;
  const int r = s.rank();
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    std::vector<int> subset;
    for (int j = 1; j <= r; ++j)
      if (mask >> (j - 1) & 1U) subset.push_back(j);
    for (const auto& a : s.domain_words()) out.push_back(membership_certificate(s, subset, a));
  }
  return out;
}

}  // namespace slzt::cycle
