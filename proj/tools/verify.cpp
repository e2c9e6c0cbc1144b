#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "slzt/building.hpp"
#include "slzt/cycle.hpp"
#include "slzt/exact.hpp"
#include "slzt/rootlift.hpp"
#include "slzt/sphere.hpp"
#include "slzt/torus.hpp"

namespace slzt::cli {

namespace {

using L = LaurentSeries;
using Clock = std::chrono::steady_clock;

Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

// Runs f, stamping the check with its wall time.
Check timed(std::string name, std::string anchor, const std::function<void(Check&)>& f) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  const auto t0 = Clock::now();
  f(c);
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return c;
}

Json word_json(const torus::WordExponents& m) { return Json(m); }

std::string str(const BigInt& x) { return x.get_str(); }

using StageBody = std::function<void(std::int64_t floor, std::vector<Check>& out)>;

void with_retry(const std::string& stage, std::int64_t floor, Report& r, const StageBody& body) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::int64_t f = attempt == 0 ? floor : 2 * floor;
    std::vector<Check> out;
    try {
      body(f, out);
      for (auto& c : out) {
        if (attempt > 0) c.witness["floor_retry"] = f;
        r.add(std::move(c));
      }
      return;
    } catch (const PrecisionError& e) {
      if (attempt == 1) {
        Check c;
        c.name = stage + ".precision";
        c.anchor = "working precision";
        c.status = Status::Inconclusive;
        c.witness["floors_tried"] = Json::array({floor, f});
        c.witness["error"] = e.what();
        r.add(std::move(c));
      }
    }
  }
}

// Det-one polynomial matrix from elementary moves; with `shape`, only
// entries the shape allows are touched.
Matrix<Poly> random_sl(std::mt19937_64& rng, std::size_t n, int steps, int max_degree,
                       const building::StabilizerShape* shape) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto m = Matrix<Poly>::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    std::int64_t deg = max_degree;
    if (shape) {
      if (shape->bound[i][j] < 0) continue;
      deg = std::min<std::int64_t>(deg, shape->bound[i][j]);
    }
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coef(rng);
    Poly p(std::move(c));
    if (p.zero()) continue;
    auto e = Matrix<Poly>::identity(n);
    e(i, j) = p;
    m = m * e;
  }
  return m;
}

building::ApartmentVertex random_sector_vertex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> gap(0, 3);
  std::vector<std::int64_t> m(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) m[i] = m[i + 1] + gap(rng);
  return building::ApartmentVertex::canonical(std::move(m));
}

}  // namespace

void verify_root(const RunConfig& cfg, Report& r) {
  const int n = cfg.n;
  with_retry("root", cfg.prec.value_or(rootlift::default_floor(n)), r, [&](std::int64_t floor, std::vector<Check>& out) {
    const auto q = rootlift::q_sequence(n);
    std::vector<L> roots;
    for (int k = 1; k <= n; ++k) {
      out.push_back(timed("root.branch." + std::to_string(k), "root lifting: f(alpha) = 0, c_0 = -q_k", [&](Check& c) {
        const auto st = rootlift::lift_coefficients(n, k, floor);
        const L a = rootlift::to_series(st);
        roots.push_back(a);
        const std::int64_t v = rootlift::residual_valuation(a, n);
        const std::int64_t need = 1 - 2 * n - floor;
        c.witness["c0"] = st.coefficients.at(0).get_str();
        if (st.coefficients.size() > 1) c.witness["c1"] = st.coefficients[1].get_str();
        c.witness["residual_valuation"] = v == kInfiniteValuation ? Json("infinite") : Json(v);
        c.witness["required"] = need;
        c.status = status_of(st.coefficients.at(0) == -q[static_cast<std::size_t>(k - 1)] &&
                             (v == kInfiniteValuation || v >= need));
      }));
    }
    out.push_back(timed("root.product", "root lifting: prod_k (alpha + q_k t) = 1", [&](Check& c) {
      L prod(1);
      for (long qk : q) prod = prod * (roots.at(0) + L::monomial(qk, 1));
      c.witness["floor"] = prod.floor();
      c.status = status_of(prod.agrees_with(L(1)));
    }));
    out.push_back(timed("root.vieta", "root lifting: symmetric functions of the branches", [&](Check& c) {
      long qsum = 0, qprod = 1;
      for (long x : q) qsum += x, qprod *= x;
      L sum, prod(1);
      for (const auto& a : roots) sum = sum + a, prod = prod * a;
      const L constant = L::from_poly(t_power(n, qprod) - Poly(1)).scaled(n % 2 == 0 ? 1 : -1);
      const bool s_ok = sum.agrees_with(L::monomial(-qsum, 1));
      const bool p_ok = prod.agrees_with(constant);
      c.witness["sum"] = s_ok;
      c.witness["product"] = p_ok;
      c.status = status_of(s_ok && p_ok);
    }));
  });
}

void verify_torus(const RunConfig& cfg, Report& r) {
  const int n = cfg.n;
  const long bound = cfg.word_bound;
  with_retry("torus", cfg.prec.value_or(rootlift::default_floor(n)), r, [&](std::int64_t floor, std::vector<Check>& out) {
    const auto gens = torus::make_generators(n);
    const auto id = Matrix<Poly>::identity(static_cast<std::size_t>(n));
    out.push_back(timed("torus.companion", "f(C_f) = 0", [&](Check& c) {
      c.status = status_of(torus::evaluate_at(gens.f, gens.companion) == Matrix<Poly>(id.rows(), id.cols()));
    }));
    out.push_back(timed("torus.factor_product", "prod_i (C_f + q_i t I) = I", [&](Check& c) {
      auto p = id;
      for (const auto& f : gens.factors) p = p * f;
      c.status = status_of(p == id);
    }));
    out.push_back(timed("torus.det", "a_i in SL_n(Z[t])", [&](Check& c) {
      bool ok = true;
      for (const auto& a : gens.generators) ok = ok && det(a) == Poly(1) && is_integral(a);
      c.witness["generators"] = gens.generators.size();
      c.status = status_of(ok);
    }));
    out.push_back(timed("torus.commute", "a_i a_j = a_j a_i", [&](Check& c) {
      bool ok = true;
      for (std::size_t i = 0; i < gens.generators.size(); ++i)
        for (std::size_t j = i + 1; j < gens.generators.size(); ++j)
          ok = ok && gens.generators[i] * gens.generators[j] == gens.generators[j] * gens.generators[i];
      c.status = status_of(ok);
    }));

    const auto words = torus::nonzero_words(n - 1, bound);
    const torus::EigenSystem sys(n, floor, bound);
    out.push_back(timed("torus.leading_terms", "free abelian rank n-1: eigenvalue leading terms", [&](Check& c) {
      std::size_t bad = 0;
      Json first;
      for (const auto& m : words) {
        try {
          (void)torus::leading_term_certificate(sys, m);
        } catch (const ConstructionError&) {
          if (bad++ == 0) first = word_json(m);
        }
      }
      c.witness["words"] = words.size();
      c.witness["failures"] = bad;
      if (bad) c.witness["first_failure"] = first;
      c.status = status_of(bad == 0);
    }));
    out.push_back(timed("torus.words_nontrivial", "nonzero words are not the identity", [&](Check& c) {
      std::size_t bad = 0;
      for (const auto& m : words) bad += torus::word_matrix(gens, m) == id;
      c.witness["words"] = words.size();
      c.witness["failures"] = bad;
      c.status = status_of(bad == 0);
    }));
    out.push_back(timed("torus.diagonalizer", "g a_i g^-1 is diagonal", [&](Check& c) {
      const auto d = torus::diagonalizer(sys);
      std::int64_t lo = kInfiniteValuation;
      bool known_bad = false;
      for (const auto& a : gens.generators) {
        const auto m = torus::conjugate(d, a);
        lo = std::min(lo, torus::min_offdiagonal_valuation(m));
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j).has_terms() && -m(i, j).top() < 20) known_bad = true;
      }
      // A low bound with no surviving term only reflects the floor.
      if (lo < 20 && !known_bad) throw PrecisionError("diagonalizer: off-diagonal bound limited by the floor");
      c.witness["min_offdiagonal_valuation"] = lo;
      c.witness["required"] = 20;
      c.status = status_of(lo >= 20);
    }));
    out.push_back(timed("torus.no_fixed_point", "words of A fix no point of X", [&](Check& c) {
      std::size_t certified = 0, inconclusive = 0;
      Json first;
      for (const auto& m : words) {
        const auto cert = torus::fixes_no_point_certificate(sys, m);
        if (cert.status == torus::CertificateStatus::Certified && cert.leading_term_nontrivial) ++certified;
        else {
          if (cert.status == torus::CertificateStatus::Inconclusive) ++inconclusive;
          if (first.is_null()) first = word_json(m);
        }
      }
      c.witness["words"] = words.size();
      c.witness["certified"] = certified;
      if (!first.is_null()) c.witness["first_uncertified"] = first;
      if (certified == words.size()) c.status = Status::Pass;
      else if (certified + inconclusive == words.size()) c.status = Status::Inconclusive;
      else c.status = Status::Fail;
    }));
    out.push_back(timed("torus.fixes_vertex_crosscheck", "sampled words move sampled vertices", [&](Check& c) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      std::uniform_int_distribution<std::int64_t> ex(-3, 3);
      const auto nn = static_cast<std::size_t>(n);
      std::vector<building::LatticeVertex> verts;
      for (int i = 0; i < 10; ++i) {
        std::vector<std::int64_t> m(nn);
        for (auto& x : m) x = ex(rng);
        const auto h = to_laurent(random_sl(rng, nn, 4, 2, nullptr));
        verts.push_back(building::LatticeVertex::from_apartment(building::ApartmentVertex::canonical(m)).translated(h));
      }
      std::size_t fixed = 0, pairs = 0;
      for (int w = 0; w < 10; ++w) {
        const auto g = to_laurent(torus::word_matrix(gens, words[pick(rng)]));
        for (const auto& v : verts) {
          ++pairs;
          fixed += building::fixes_vertex(g, v);
        }
      }
      c.witness["pairs"] = pairs;
      c.witness["fixed"] = fixed;
      c.status = status_of(fixed == 0);
    }));
  });
}

void verify_building(const RunConfig& cfg, Report& r) {
  const auto n = static_cast<std::size_t>(cfg.n);
  with_retry("building", cfg.prec.value_or(-60), r, [&](std::int64_t, std::vector<Check>& out) {
    out.push_back(timed("building.stabilizer_oracle", "stabilizer of D(t^m) x0 by degree bounds", [&](Check& c) {
      std::mt19937_64 rng(cfg.seed);
      std::vector<building::ApartmentVertex> verts;
      for (int i = 0; i < 10; ++i) verts.push_back(random_sector_vertex(rng, n));
      std::size_t agree = 0, disagree = 0, undecidable = 0, inside = 0;
      for (int s = 0; s < cfg.samples; ++s) {
        const auto shape = building::stabilizer_degree_bounds(verts[static_cast<std::size_t>(s) % verts.size()]);
        const auto g = random_sl(rng, n, 6, 3, s % 2 == 0 ? &shape : nullptr);
        for (const auto& v : verts) {
          const bool predicted = building::stabilizer_degree_bounds(v).contains(g);
          inside += predicted;
          try {
            (building::fixes_vertex(g, building::LatticeVertex::from_apartment(v)) == predicted ? agree : disagree)++;
          } catch (const PrecisionError&) {
            ++undecidable;
          }
        }
      }
      c.witness["vertices"] = verts.size();
      c.witness["matrices"] = cfg.samples;
      c.witness["agree"] = agree;
      c.witness["disagree"] = disagree;
      c.witness["undecidable"] = undecidable;
      c.witness["in_shape"] = inside;
      c.status = status_of(disagree == 0 && undecidable == 0);
    }));
    out.push_back(timed("building.boundary_combinatorics", "fixed boundary vertices form an (n-2)-simplex", [&](Check& c) {
      const auto rep = building::verify_M_combinatorics(n);
      c.witness["vertices"] = rep.vertex_count;
      c.witness["fixed"] = rep.fixed_count;
      c.witness["maximal_chains"] = rep.maximal_chains;
      c.witness["facets_ok"] = rep.facets_ok;
      if (!rep.ok()) c.witness["failures"] = rep.failures;
      c.status = status_of(rep.ok());
    }));
    out.push_back(timed("building.contraction", "b^-k E_jn(1) b^k gains valuation kn", [&](Check& c) {
      bool ok = true;
      for (std::size_t j = 1; j < n; ++j)
        for (std::int64_t k = 0; k <= 10; ++k)
          ok = ok && building::contraction_profile(n, j, k) == k * static_cast<std::int64_t>(n);
      c.witness["k_max"] = 10;
      c.status = status_of(ok);
    }));
  });
}

void verify_cycle(const RunConfig& cfg, Report& r) {
  with_retry("cycle", cfg.prec.value_or(-120), r, [&](std::int64_t floor, std::vector<Check>& out) {
    cycle::CycleConfig cc;
    cc.n = cfg.n;
    cc.k = cfg.k;
    cc.floor = floor;
    cc.ell = cfg.ell;
    std::unique_ptr<cycle::CycleSetup> sp;
    out.push_back(timed("cycle.setup", "apartment g^-1 A, basepoint y, e = b^k0 y", [&](Check& c) {
      sp = std::make_unique<cycle::CycleSetup>(cc);
      const auto& s = *sp;
      c.witness["y"] = s.y();
      c.witness["e"] = s.e();
      c.witness["bke"] = s.bke();
      c.witness["k0"] = s.k0();
      c.witness["floor"] = s.floor();
      c.witness["domain_words"] = s.domain_words().size();
      c.witness["de_sample"] = s.de_sample();
    }));
    const auto& s = *sp;

    out.push_back(timed("cycle.translation_lattice", "A acts on V_e as a lattice of rank n-2", [&](Check& c) {
      std::vector<std::vector<std::int64_t>> vs;
      bool sums = true;
      for (const auto& m : s.domain_words()) {
        const auto nu = s.translation(m);
        std::int64_t t = 0;
        for (auto x : nu) t += x;
        sums = sums && t == 0;
        vs.push_back(nu);
      }
      const auto rank = cycle::lattice_rank(vs);
      c.witness["generator_translations"] = s.generator_translations();
      c.witness["rank"] = rank;
      c.status = status_of(sums && rank == static_cast<std::size_t>(s.n() - 2));
    }));
    for (int j = 1; j <= s.rank(); ++j)
      out.push_back(timed("cycle.wall." + std::to_string(j), "r_j b^k e = b^k e, r_j moves the y side", [&](Check& c) {
        const auto w = cycle::check_wall(s, j);
        c.witness["fixes_bke"] = w.fixes_bke;
        c.witness["fixes_b^(k-1)e"] = w.fixes_previous;
        c.witness["fixes_b^(k+1)e"] = w.fixes_next;
        c.witness["fixes_y"] = w.fixes_y;
        c.witness["ell_power_same_wall"] = w.power_same_wall;
        c.status = status_of(w.fixes_bke && !w.fixes_previous && !w.fixes_y && w.power_same_wall);
      }));
    out.push_back(timed("cycle.wall_contraction", "coordinate of r_j at b^i b^k e gains valuation i*n", [&](Check& c) {
      bool ok = true;
      const auto n = static_cast<std::size_t>(s.n());
      for (int j = 1; j <= s.rank(); ++j) {
        const auto rj = s.wall_elements()[static_cast<std::size_t>(j - 1)].matrix();
        auto entry = [&](std::int64_t i) {
          const auto v = s.vertex(s.b_power(s.bke(), i));
          const auto m = v.basis_inverse() * rj * v.basis();
          return valuation(m(static_cast<std::size_t>(j - 1), n - 1));
        };
        const auto base = entry(0);
        for (std::int64_t i = 1; i <= 3; ++i) ok = ok && entry(i) - base == i * s.n();
      }
      c.witness["steps"] = 3;
      c.status = status_of(ok);
    }));
    out.push_back(timed("cycle.ell", "l = prod_a prod_i l(a, r_i)", [&](Check& c) {
      BigInt prod = 1;
      BigInt biggest = 1;
      for (const auto& f : s.ell_factors()) {
        prod *= f.value;
        if (f.value > biggest) biggest = f.value;
      }
      c.witness["ell"] = str(s.ell());
      c.witness["factors"] = s.ell_factors().size();
      c.witness["largest_factor"] = str(biggest);
      c.witness["overridden"] = s.ell_overridden();
      c.status = status_of(s.ell_overridden() || prod == s.ell());
    }));
    out.push_back(timed("cycle.power_identity", "(a^-1 u^l a)' = ((a^-1 u a)')^l", [&](Check& c) {
      std::size_t pairs = 0, bad = 0, nonintegral = 0;
      for (const auto& a : s.domain_words())
        for (int j = 1; j <= s.rank(); ++j) {
          const auto p = cycle::check_power_identity(s, a, j);
          ++pairs;
          bad += !p.holds;
          nonintegral += !p.integral;
        }
      c.witness["pairs"] = pairs;
      c.witness["failures"] = bad;
      c.witness["nonintegral"] = nonintegral;
      // Non-integral powers only mean l was overridden with a bad value.
      c.status = status_of(bad == 0 && (nonintegral == 0 || s.ell_overridden()));
    }));
    out.push_back(timed("cycle.certificates", "(prod_S r_j^l) a D_e lies in SL_n(Z[t]) D_e", [&](Check& c) {
      const auto certs = cycle::membership_certificates(s);
      std::size_t valid = 0, vertex_checks = 0;
      Json first;
      for (const auto& m : certs) {
        vertex_checks += m.checked.size();
        if (m.valid()) ++valid;
        else if (first.is_null()) {
          first["subset"] = m.subset;
          first["word"] = word_json(m.word);
          first["integral"] = m.integral;
          first["det_one"] = m.det_one;
          first["residual_small"] = m.residual_small;
          first["rescaling_identity"] = m.rescaling_identity;
          first["recomposes"] = m.recomposes;
        }
      }
      c.witness["certificates"] = certs.size();
      c.witness["valid"] = valid;
      c.witness["vertex_checks"] = vertex_checks;
      c.witness["subsets"] = std::size_t{1} << s.rank();
      if (!first.is_null()) c.witness["first_invalid"] = first;
      c.status = status_of(valid == certs.size());
    }));

    const cycle::SphereComplex sphere(s.n(), s.ell(), s.k());
    const int top = s.n() - 1;
    out.push_back(timed("cycle.sphere.boundary", "Y_l and omega_l: boundary of boundary is zero", [&](Check& c) {
      c.witness["top_cells"] = sphere.cells(top).size();
      c.status = status_of(sphere.boundary_squares_to_zero() && sphere.cells(top).size() == std::size_t{1} << top);
    }));
    out.push_back(timed("cycle.sphere.omega_homology", "omega_l is an (n-2)-sphere", [&](Check& c) {
      bool ok = true;
      Json h = Json::array();
      for (int d = 0; d <= s.n() - 2; ++d) {
        const auto g = sphere.reduced_homology(d, true);
        h.push_back(cycle::to_string(g));
        ok = ok && g == cycle::HomologyGroup{d == s.n() - 2 ? 1u : 0u, {}};
      }
      c.witness["reduced_homology"] = h;
      const auto chi = sphere.euler_characteristic(true);
      c.witness["euler"] = chi;
      c.status = status_of(ok && chi == 1 + (s.n() % 2 == 0 ? 1 : -1));
    }));
    out.push_back(timed("cycle.sphere.ball_homology", "Y_l is a ball", [&](Check& c) {
      bool ok = sphere.homology(0, false) == cycle::HomologyGroup{1, {}};
      for (int d = 1; d <= top; ++d) ok = ok && sphere.homology(d, false) == cycle::HomologyGroup{};
      c.witness["euler"] = sphere.euler_characteristic(false);
      c.status = status_of(ok && sphere.euler_characteristic(false) == 1);
    }));
    out.push_back(timed("cycle.sphere.bke_interior", "b^k e lies inside Y_l", [&](Check& c) {
      const auto signs = sphere.fundamental_signs();
      bool bounds = !signs.empty();
      const auto bd = sphere.boundary_of_fundamental_chain();
      const auto& faces = sphere.cells(top - 1);
      for (std::size_t i = 0; i < faces.size() && bounds; ++i)
        bounds = cycle::SphereComplex::on_sphere(faces[i]) ? abs(bd[i]) == 1 : bd[i] == 0;
      c.witness["fundamental_chain_bounds_omega"] = bounds;
      c.status = status_of(sphere.centre_is_interior() && bounds);
    }));
  });
}

Report run_verify(const RunConfig& c) {
  Report r(c);
  const std::vector<std::pair<std::string, void (*)(const RunConfig&, Report&)>> stages = {
      {"root", verify_root}, {"torus", verify_torus}, {"building", verify_building}, {"cycle", verify_cycle}};
  for (const auto& [name, fn] : stages) {
    if (c.command != "all" && c.command != name) continue;
    fn(c, r);
    if (c.command == "all" && r.any_failed() && name != "cycle") {
      r.note_stop(name);
      break;
    }
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the SL_n(Z[t]) finiteness-length constructions", "slzt"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run one verification stage or all of them");

  RunConfig cfg;
  std::string ell = "auto", format = "text";
  std::optional<std::int64_t> prec;
  verify->add_option("stage", cfg.command, "root | torus | building | cycle | all")
      ->required()
      ->check(CLI::IsMember({"root", "torus", "building", "cycle", "all"}));
  verify->add_option("--n", cfg.n, "matrix size (>= 2)")->capture_default_str();
  verify->add_option("--prec", prec, "precision floor, at most 1 - n (default per stage)");
  verify->add_option("--word-bound", cfg.word_bound, "bound M on |m_i| for torus words")->capture_default_str();
  verify->add_option("--k", cfg.k, "escape exponent k for b^k e")->capture_default_str();
  verify->add_option("--ell", ell, "l override, or auto")->capture_default_str();
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "random seed for sampled checks")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "random matrices in the stabilizer oracle")->capture_default_str();
  verify->add_flag("--timing", cfg.timing, "record wall time per check");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto usage = [&](const std::string& msg) {
    err << "slzt: " << msg << "\n";
    return 2;
  };
  if (cfg.n < 2) return usage("--n must be at least 2");
  if (prec && *prec > 1 - cfg.n) return usage("--prec must be at most 1 - n");
  cfg.prec = prec;
  if (cfg.word_bound < 1) return usage("--word-bound must be at least 1");
  if (cfg.k < 1) return usage("--k must be at least 1");
  if (cfg.samples < 1) return usage("--samples must be at least 1");
  if (ell != "auto") {
    BigInt v;
    if (ell.empty() || ell.find_first_not_of("0123456789") != std::string::npos || v.set_str(ell, 10) != 0 || v < 1)
      return usage("--ell must be a positive integer or auto");
    cfg.ell = v;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  const Report r = run_verify(cfg);
  out << r.render();
  return r.exit_code();
}

}  // namespace slzt::cli
