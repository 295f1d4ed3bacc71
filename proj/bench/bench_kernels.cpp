// Serial reference against OpenMP for each kernel. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qnary/kernels.hpp"
#include "qnary/quantum.hpp"

namespace {

using namespace qnary;

std::vector<double> random_ks(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(0.0, 1e4);
  std::vector<double> ks(count);
  for (auto& k : ks) k = dist(rng);
  return ks;
}

template <auto Kernel>
void BM_count_strict_words(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(2, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <auto Kernel>
void BM_sample_coefficient(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto inst = quantum::make_instance(2, m, 1);
  const auto ks = random_ks(256);
  std::vector<quantum::Complex> out(ks.size());
  for (auto _ : state) {
    Kernel(inst, 4, ks, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size()));
}

template <auto Kernel>
void BM_evaluate_expansion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = quantum::make_instance(2, 3, 1);
  const quantum::PseudoOrbitExpansion expansion(inst, n);
  const auto ks = random_ks(4096);
  std::vector<quantum::Complex> out(ks.size());
  for (auto _ : state) {
    Kernel(expansion.terms(), ks, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size() * expansion.terms().size()));
}

}  // namespace

BENCHMARK(BM_count_strict_words<kernels::serial::count_strict_words>)->Name("count_strict_words/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_count_strict_words<kernels::omp::count_strict_words>)->Name("count_strict_words/omp")->Arg(16)->Arg(20);
BENCHMARK(BM_sample_coefficient<kernels::serial::sample_coefficient>)->Name("sample_coefficient/serial")->Arg(2)->Arg(3);
BENCHMARK(BM_sample_coefficient<kernels::omp::sample_coefficient>)->Name("sample_coefficient/omp")->Arg(2)->Arg(3);
BENCHMARK(BM_evaluate_expansion<kernels::serial::evaluate_expansion>)->Name("evaluate_expansion/serial")->Arg(8)->Arg(12);
BENCHMARK(BM_evaluate_expansion<kernels::omp::evaluate_expansion>)->Name("evaluate_expansion/omp")->Arg(8)->Arg(12);

BENCHMARK_MAIN();
