#include <benchmark/benchmark.h>

#include <random>

#include "slzt/building.hpp"
#include "slzt/cycle.hpp"
#include "slzt/exact.hpp"
#include "slzt/rootlift.hpp"
#include "slzt/sphere.hpp"
#include "slzt/torus.hpp"

using namespace slzt;

static void BM_LaurentMul(benchmark::State& st) {
  const auto a = rootlift::lift_root(4, 1, -st.range(0));
  const auto b = rootlift::lift_root(4, 2, -st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(80)->Arg(160)->Arg(320);

static void BM_LiftAllRoots(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rootlift::lift_all_roots(n, rootlift::default_floor(n)));
}
BENCHMARK(BM_LiftAllRoots)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BerkowitzDet(benchmark::State& st) {
  const auto g = torus::make_generators(static_cast<int>(st.range(0)));
  const auto w = g.generators[0] * g.generators.back();
  for (auto _ : st) benchmark::DoNotOptimize(det(w));
}
BENCHMARK(BM_BerkowitzDet)->DenseRange(2, 6);

static void BM_WordCertificates(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const torus::EigenSystem sys(n, rootlift::default_floor(n), 3);
  const auto words = torus::nonzero_words(n - 1, 3);
  for (auto _ : st)
    for (const auto& m : words) benchmark::DoNotOptimize(torus::fixes_no_point_certificate(sys, m));
  st.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_WordCertificates)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Diagonalizer(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(torus::diagonalizer(n, rootlift::default_floor(n)));
}
BENCHMARK(BM_Diagonalizer)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_FixesVertex(benchmark::State& st) {
  const auto v = building::LatticeVertex::from_apartment(building::ApartmentVertex::canonical({6, 3, 1, 0}));
  const auto g = to_laurent(torus::make_generators(4).generators[0]);
  for (auto _ : st) benchmark::DoNotOptimize(building::fixes_vertex(g, v));
}
BENCHMARK(BM_FixesVertex);

static void BM_CycleSetup(benchmark::State& st) {
  cycle::CycleConfig c;
  c.n = 3;
  c.k = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(cycle::CycleSetup(c));
}
BENCHMARK(BM_CycleSetup)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

static void BM_MembershipCertificates(benchmark::State& st) {
  cycle::CycleConfig c;
  c.n = 3;
  c.k = st.range(0);
  const cycle::CycleSetup s(c);
  for (auto _ : st) benchmark::DoNotOptimize(cycle::membership_certificates(s));
}
BENCHMARK(BM_MembershipCertificates)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

static void BM_SphereHomology(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const cycle::SphereComplex c(n, 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(c.reduced_homology(n - 2, true));
}
BENCHMARK(BM_SphereHomology)->DenseRange(2, 6);

BENCHMARK_MAIN();
