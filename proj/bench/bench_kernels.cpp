// Serial reference vs OpenMP for every kernel. Run with
// OMP_NUM_THREADS=<k> to see scaling; results are identical by construction
// (the unit tests check that), only the timings differ.

#include <benchmark/benchmark.h>

#include "sturmian/characterization.hpp"
#include "sturmian/kernels.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/sturmian_gen.hpp"

using namespace sturmian;
namespace ks = sturmian::kernels::serial;
namespace ko = sturmian::kernels::omp;

namespace {

const RotationParams& fib() {
  static const RotationParams p = RotationParams::make(fibonacci_gamma(), QuadIrrational());
  return p;
}

const std::vector<std::uint8_t>& window(std::size_t n) {
  static std::vector<std::uint8_t> w;
  if (w.size() != n) w = ko::code_window(fib(), 0, n, EndpointPolicy::half_open);
  return w;
}

std::vector<std::size_t> ones_of(const std::vector<std::uint8_t>& w) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k]) out.push_back(k);
  }
  return out;
}

kernels::ScaledHamiltonian hamiltonian(std::size_t len) {
  const DistanceProfile p = distance_profile(fibonacci_gamma(), 64);
  kernels::ScaledHamiltonian h;
  h.length = len;
  h.pair_weight.assign(len, 0);
  for (std::size_t d = 1; d < len; ++d) h.pair_weight[d] = p.is_forbidden(static_cast<std::int64_t>(d)) ? std::int64_t{1} << (40 - d) : 0;
  h.zero_run_len = 3;
  h.zero_run_weight = std::int64_t{1} << 40;
  return h;
}

kernels::LegalityRules rules(std::size_t m) {
  const DistanceProfile p = distance_profile(fibonacci_gamma(), static_cast<std::int64_t>(m));
  kernels::LegalityRules r;
  r.forbidden.assign(m + 1, 0);
  for (std::size_t d = 1; d < m; ++d) r.forbidden[d] = p.is_forbidden(static_cast<std::int64_t>(d));
  r.zero_run_len = 3;
  return r;
}

template <auto Fn>
void code_window(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(fib(), 12345, n, EndpointPolicy::half_open));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void balance_scan(benchmark::State& state) {
  const auto& w = window(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(w));
}

template <auto Fn>
void gap_ranges(benchmark::State& state) {
  const auto ones = ones_of(window(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(ones));
}

template <auto Fn>
void segment_extrema(benchmark::State& state) {
  const auto& w = window(static_cast<std::size_t>(state.range(0)));
  std::vector<std::uint8_t> occurs(w.size() - 1);
  for (std::size_t s = 0; s + 1 < w.size(); ++s) occurs[s] = !w[s] && w[s + 1];  // "01"
  for (auto _ : state) benchmark::DoNotOptimize(Fn(occurs, 2, w.size()));
}

template <auto Fn>
void energy_scan(benchmark::State& state) {
  const auto h = hamiltonian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(h));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

template <auto Fn>
void legal_centers(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto r = rules(m);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(12, m, r, kDefaultNodeBudget));
}

}  // namespace

BENCHMARK(code_window<ks::code_window>)->Name("code_window/serial")->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(code_window<ko::code_window>)->Name("code_window/omp")->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(balance_scan<ks::balance_scan>)->Name("balance_scan/serial")->Arg(500)->Arg(2000);
BENCHMARK(balance_scan<ko::balance_scan>)->Name("balance_scan/omp")->Arg(500)->Arg(2000);
BENCHMARK(gap_ranges<ks::gap_ranges>)->Name("gap_ranges/serial")->Arg(2000)->Arg(8000);
BENCHMARK(gap_ranges<ko::gap_ranges>)->Name("gap_ranges/omp")->Arg(2000)->Arg(8000);
BENCHMARK(segment_extrema<ks::segment_extrema>)->Name("segment_extrema/serial")->Arg(2000)->Arg(4000);
BENCHMARK(segment_extrema<ko::segment_extrema>)->Name("segment_extrema/omp")->Arg(2000)->Arg(4000);
BENCHMARK(energy_scan<ks::energy_scan>)->Name("energy_scan/serial")->Arg(16)->Arg(20);
BENCHMARK(energy_scan<ko::energy_scan>)->Name("energy_scan/omp")->Arg(16)->Arg(20);
BENCHMARK(legal_centers<ks::legal_centers>)->Name("legal_centers/serial")->Arg(64)->Arg(128);
BENCHMARK(legal_centers<ko::legal_centers>)->Name("legal_centers/omp")->Arg(64)->Arg(128);

BENCHMARK_MAIN();
