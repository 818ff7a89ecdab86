#include "qdtm/distribution.hpp"
#include "qdtm/quasi_integral.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/reconstruction.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qdtm;

const Space kLine = Space::line();

Dtm bench_measure() {
  return Dtm::combo(kLine, {{Rational(1, 2), Dtm::lebesgue_on(kLine, -1, 1)},
                            {3, Dtm::dirac(kLine, 2)},
                            {1, Dtm::simple_contains(kLine, -2, -1)}});
}

PwlFunction bench_function(int nodes) {
  Rng rng(12345);
  PwlOptions opts;
  opts.max_interior_nodes = nodes;
  return random_pwl(rng, kLine, opts);
}

void BM_IntervalUnion(benchmark::State& state) {
  Rng rng(1);
  const IntervalSet a = random_open_set(rng, kLine, 3);
  const IntervalSet b = random_open_set(rng, kLine, 3);
  for (auto _ : state) benchmark::DoNotOptimize(set_union(a, b));
}
BENCHMARK(BM_IntervalUnion);

void BM_DistributionBundle(benchmark::State& state) {
  const Dtm mu = bench_measure();
  const PwlFunction f = bench_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distribution_bundle(mu, f));
}
BENCHMARK(BM_DistributionBundle)->Arg(4)->Arg(16);

void BM_QuasiIntegral(benchmark::State& state) {
  const Dtm mu = bench_measure();
  const PwlFunction f = bench_function(8);
  for (auto _ : state) benchmark::DoNotOptimize(quasi_integral_R(mu, f));
}
BENCHMARK(BM_QuasiIntegral);

void BM_ReconstructOpen(benchmark::State& state) {
  const Dtm mu = bench_measure();
  const FunctionalHandle rho = FunctionalHandle::induced_R(mu);
  const IntervalSet u(Interval::open(Rational(-3, 2), Rational(5, 2)));
  const RampSchedule schedule = RampSchedule::standard();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_open(rho, u, schedule));
}
BENCHMARK(BM_ReconstructOpen);

}  // namespace

BENCHMARK_MAIN();
