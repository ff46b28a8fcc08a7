// Serial reference engines against the OpenMP kernels.
//   ./bench_enumerate --benchmark_filter=pqrs

#include <benchmark/benchmark.h>

#include "norminf/enumerate.hpp"
#include "norminf/symmetry.hpp"

using namespace norminf;

namespace {

LatticePtr lattice(const char* spec) { return Lattice::build(GroupSpec::parse(spec)); }

void serial_dfs(benchmark::State& state, const char* spec) {
  auto l = lattice(spec);
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate_dfs(*l, [&](const PairSet&) { ++n; });
    benchmark::DoNotOptimize(n);
    state.counters["systems"] = static_cast<double>(n);
  }
}

void serial_brute(benchmark::State& state, const char* spec) {
  auto l = lattice(spec);
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate_brute(*l, [&](const PairSet&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}

void parallel_count(benchmark::State& state, const char* spec, Engine engine) {
  auto l = lattice(spec);
  EnumerationOptions opt;
  opt.engine = engine;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_systems(*l, opt));
  state.counters["threads"] = worker_count(opt.threads);
}

void parallel_by_comp(benchmark::State& state, const char* spec) {
  auto l = lattice(spec);
  EnumerationOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_by_comp(*l, opt));
}

void involution(benchmark::State& state, const char* spec) {
  auto l = lattice(spec);
  auto systems = collect_systems(*l);
  for (auto _ : state) benchmark::DoNotOptimize(verify_involution(*l, systems, 0).ok);
}

}  // namespace

BENCHMARK_CAPTURE(serial_dfs, pqr, "2,3,5");
BENCHMARK_CAPTURE(serial_brute, pqr, "2,3,5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel_count, pqr_brute, "2,3,5", Engine::brute)
    ->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel_count, pqr_dfs, "2,3,5", Engine::dfs)->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(serial_dfs, chain8, "2^8");
BENCHMARK_CAPTURE(serial_dfs, pqrs, "2,3,5,7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel_count, pqrs_dfs, "2,3,5,7", Engine::dfs)
    ->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel_by_comp, pqrs, "2,3,5,7")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(involution, pqr, "2,3,5");

BENCHMARK_MAIN();
