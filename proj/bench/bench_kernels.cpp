// Serial reference vs OpenMP kernels on the full basis.
//   csm_bench --benchmark_filter=Period
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "csm/kernels.hpp"
#include "csm/types.hpp"

namespace {

using namespace csm;
namespace k = csm::kernels;

struct Fixture {
  int n_sat;
  StateVector amps;
  std::vector<k::ShearRotation> low;
  std::vector<k::ShearRotation> high;
  k::ShearRotation rot = k::ShearRotation::from_angle(0.7);

  explicit Fixture(int n) : n_sat(n), amps(std::size_t{1} << (n + 1)) {
    std::mt19937_64 rng{7};
    std::normal_distribution<double> gauss;
    double norm = 0.0;
    for (Complex& a : amps) {
      a = {gauss(rng), gauss(rng)};
      norm += std::norm(a);
    }
    for (Complex& a : amps) a /= std::sqrt(norm);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const int low_bits = (n + 1) / 2;
    low.resize(std::size_t{1} << low_bits);
    high.resize(std::size_t{1} << (n + 1 - low_bits));
    for (auto& r : low) r = k::ShearRotation::from_angle(angle(rng));
    for (auto& r : high) r = k::ShearRotation::from_angle(angle(rng));
  }

  k::SplitDiagonal diag() const { return {low, high, (n_sat + 1) / 2}; }
};

void finish(benchmark::State& state, const Fixture& f) {
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(f.amps.size()) *
                          static_cast<std::int64_t>(sizeof(Complex)));
  state.counters["n_sat"] = f.n_sat;
  state.counters["threads"] = k::max_threads();
}

template <void (*Kernel)(std::span<Complex>, const k::SplitDiagonal&)>
void Diagonal(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Kernel(f.amps, f.diag());
    benchmark::ClobberMemory();
  }
  finish(state, f);
}

template <void (*Kernel)(std::span<Complex>, int, const k::ShearRotation&)>
void Interaction(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Kernel(f.amps, f.n_sat, f.rot);
    benchmark::ClobberMemory();
  }
  finish(state, f);
}

template <void (*Kernel)(std::span<Complex>, int, const k::SplitDiagonal&,
                         const k::ShearRotation&)>
void Period(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Kernel(f.amps, f.n_sat, f.diag(), f.rot);
    benchmark::ClobberMemory();
  }
  finish(state, f);
}

template <double (*Kernel)(std::span<const Complex>, int)>
void SatelliteSx(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.amps, f.n_sat));
  finish(state, f);
}

template <k::CentralDensity (*Kernel)(std::span<const Complex>, int)>
void Central(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.amps, f.n_sat));
  finish(state, f);
}

template <double (*Kernel)(std::span<const Complex>)>
void Norm(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.amps));
  finish(state, f);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {9, 13, 17, 19}) b->Arg(n);
  b->ArgName("n_sat")->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(Diagonal<k::serial::apply_diagonal>)->Name("Diagonal/serial")->Apply(sizes);
BENCHMARK(Diagonal<k::parallel::apply_diagonal>)->Name("Diagonal/omp")->Apply(sizes);
BENCHMARK(Interaction<k::serial::apply_conditional_x_rotation>)
    ->Name("Interaction/serial")
    ->Apply(sizes);
BENCHMARK(Interaction<k::parallel::apply_conditional_x_rotation>)
    ->Name("Interaction/omp")
    ->Apply(sizes);
BENCHMARK(Period<k::serial::floquet_period>)->Name("Period/serial")->Apply(sizes);
BENCHMARK(Period<k::parallel::floquet_period>)->Name("Period/omp")->Apply(sizes);
BENCHMARK(SatelliteSx<k::serial::satellite_sx_sum>)->Name("SatelliteSx/serial")->Apply(sizes);
BENCHMARK(SatelliteSx<k::parallel::satellite_sx_sum>)->Name("SatelliteSx/omp")->Apply(sizes);
BENCHMARK(Central<k::serial::central_density>)->Name("CentralDensity/serial")->Apply(sizes);
BENCHMARK(Central<k::parallel::central_density>)->Name("CentralDensity/omp")->Apply(sizes);
BENCHMARK(Norm<k::serial::norm_squared>)->Name("Norm/serial")->Apply(sizes);
BENCHMARK(Norm<k::parallel::norm_squared>)->Name("Norm/omp")->Apply(sizes);

BENCHMARK_MAIN();
