#include <benchmark/benchmark.h>

#include "projsymp/cech.hpp"
#include "projsymp/charvar.hpp"
#include "projsymp/connection.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/rng.hpp"
#include "projsymp/section_space.hpp"

namespace {

using namespace projsymp;

CechGeometryPtr make_geometry() {
  auto geom = std::make_shared<CechGeometry>();
  geom->curve = Curve::make(Curve::default_sextic());
  geom->conn = build_connection(geom->curve);
  return geom;
}

void BM_RationalKernel(benchmark::State& state) {
  Rng rng(1);
  size_t n = static_cast<size_t>(state.range(0));
  RationalMatrix m(n, 2 * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < 2 * n; ++j) m.at(i, j) = rng.small_rational_or_zero(9, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.kernel_basis());
  }
}
BENCHMARK(BM_RationalKernel)->Arg(16)->Arg(32);

void BM_SeriesSqrt(benchmark::State& state) {
  Rng rng(2);
  long prec = state.range(0);
  std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
  c[0] = Rational(1);
  for (size_t i = 1; i < c.size(); ++i) c[i] = rng.small_rational_or_zero(5, 4);
  LaurentSeries u(0, c, prec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_sqrt(u));
  }
}
BENCHMARK(BM_SeriesSqrt)->Arg(24)->Arg(48);

void BM_SectionSpace(benchmark::State& state) {
  CurvePtr curve = Curve::make(Curve::default_sextic());
  long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        section_space(curve, -1, {{PointSpec::inf_plus(), n}, {PointSpec::inf_minus(), n}}));
  }
}
BENCHMARK(BM_SectionSpace)->Arg(6)->Arg(10);

void BM_H1Model(benchmark::State& state) {
  CechGeometryPtr geom = make_geometry();
  for (auto _ : state) {
    H1Model model(geom, state.range(0));
    benchmark::DoNotOptimize(model.h1_dim());
  }
}
BENCHMARK(BM_H1Model)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Pairing(benchmark::State& state) {
  CechGeometryPtr geom = make_geometry();
  H1Model model(geom, 10);
  Rng rng(3);
  CechCocycle c1 = model.random_cocycle(rng);
  CechCocycle c2 = model.random_cocycle(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing(c1, c2));
  }
}
BENCHMARK(BM_Pairing)->Unit(benchmark::kMillisecond);

void BM_GoldmanMatrix(benchmark::State& state) {
  namespace cv = charvar;
  cv::Representation rho = cv::random_representation(2, 7);
  cv::CocycleSpaces spaces = cv::cocycle_spaces(rho);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cv::goldman_matrix(rho, spaces, cv::CupConvention::PrefixStrict));
  }
}
BENCHMARK(BM_GoldmanMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
