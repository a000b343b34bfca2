#include <benchmark/benchmark.h>

#include "eqcm/experiment.hpp"
#include "eqcm/features.hpp"
#include "eqcm/quantum.hpp"
#include "eqcm/readout.hpp"
#include "eqcm/rng.hpp"

namespace {

using namespace eqcm;

std::vector<double> word_z(int m, std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<double> z(static_cast<std::size_t>(m));
  for (double& v : z) v = rng.uniform01() < 0.45 ? -1.0 : 1.0;
  return z;
}

void BM_InitState(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto z = word_z(m, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(init_state(z));
  }
}
BENCHMARK(BM_InitState)->Arg(5)->Arg(7)->Arg(9);

void BM_Evolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto z = word_z(m, 2);
  const DensityMatrix rho0 = init_state(z);
  const Hamiltonian h =
      build_goe(m, 0.1, 11) + build_attention(z, 0.1, 0.4, AttentionTopology::AllPairs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(rho0, h, 10.0));
  }
}
BENCHMARK(BM_Evolve)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ExtractFeatures(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto z = word_z(m, 3);
  const Hamiltonian h =
      build_goe(m, 0.1, 12) + build_attention(z, 0.1, 0.4, AttentionTopology::AllPairs);
  const DensityMatrix rho = evolve(init_state(z), h, 10.0);
  const FamilyEvaluator evaluate(observable_family(FamilyKind::Full, m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(rho));
  }
}
BENCHMARK(BM_ExtractFeatures)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FitRidge(benchmark::State& state) {
  RandomSource rng(9);
  const Eigen::Index n = 300, p = 55;
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd t(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = rng.gaussian();
    t(i) = rng.gaussian();
  }
  const DesignMatrix design{x, t, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_ridge(design, 2e-3));
  }
}
BENCHMARK(BM_FitRidge);

void BM_SamplePipeline(benchmark::State& state) {
  // one full sample: encode -> initialize -> evolve -> features
  const int m = 7;
  const auto z = word_z(m, 4);
  const Hamiltonian h0 = build_goe(m, 0.1, 13);
  const FamilyEvaluator evaluate(observable_family(FamilyKind::Full, m));
  for (auto _ : state) {
    const Hamiltonian h = h0 + build_attention(z, 0.1, 0.4, AttentionTopology::AllPairs);
    const DensityMatrix rho = evolve(init_state(z), h, 10.0);
    benchmark::DoNotOptimize(evaluate(rho));
  }
}
BENCHMARK(BM_SamplePipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
