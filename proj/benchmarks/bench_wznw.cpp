#include <benchmark/benchmark.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "wznw/compact.hpp"
#include "wznw/liealg.hpp"
#include "wznw/poisson.hpp"
#include "wznw/rmatrix.hpp"

using namespace wznw;

namespace {

RVec fixed_point(const LieAlgebra& alg) {
  RVec v(alg.dim);
  for (int i = 0; i < alg.dim; ++i) v(i) = 0.2 * std::sin(1.3 * i + 0.5);
  return v;
}

void BM_kernel_operator(benchmark::State& state) {
  const LieAlgebra alg = build_sl(static_cast<int>(state.range(0)));
  DynamicalK K = make_K_nu(alg, 0.35);
  const RVec m = fixed_point(alg);
  for (auto _ : state) benchmark::DoNotOptimize(K.operator_at(m));
}
BENCHMARK(BM_kernel_operator)->Arg(2)->Arg(3);

void BM_cdybe_residual(benchmark::State& state) {
  const LieAlgebra alg = build_sl(static_cast<int>(state.range(0)));
  DynamicalK K = make_K_nu(alg, 0.35);
  const RVec m = fixed_point(alg);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cdybe_residual(CdybeForm::dynamical_only, K, m).max_abs());
}
BENCHMARK(BM_cdybe_residual)->Arg(2)->Arg(3);

void BM_jacobiator(benchmark::State& state) {
  const LieAlgebra alg = build_sl(2);
  ChartParams p;
  p.nu = 0.35;
  p.base = alg.matrix_of(0.4 * fixed_point(alg)).exp();
  PoissonChart c = build_chart(ChartKind::wznw_groupoid, alg, p);
  RVec x = RVec::Zero(c.dim);
  x.head(3) = fixed_point(alg);
  for (auto _ : state) benchmark::DoNotOptimize(jacobiator_max(c, x, 1e-4));
}
BENCHMARK(BM_jacobiator);

void BM_iwasawa(benchmark::State& state) {
  const RealifiedDouble dd =
      build_realified_double(static_cast<int>(state.range(0)));
  const Mat a = (dd.compact.matrix_of(fixed_point(dd.compact)) +
                 dd.borel.matrix_of(fixed_point(dd.borel)))
                    .exp();
  for (auto _ : state) benchmark::DoNotOptimize(iwasawa_cartan(dd, a));
}
BENCHMARK(BM_iwasawa)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
