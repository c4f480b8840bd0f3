// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "sgraph/constructions.hpp"
#include "sgraph/kernels.hpp"
#include "sgraph/switching.hpp"
#include "sgraph/twographs.hpp"

using namespace sgraph;

namespace {

SignedMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(20170923);
  std::uniform_int_distribution<int> d(-1, 1);
  SignedMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

template <IntMatrix (*Gram)(const SignedMatrix&)>
void BM_gram(benchmark::State& state) {
  const auto m = sylvester_hadamard(unsigned(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Gram(m));
}

template <IntMatrix (*Product)(const SignedMatrix&, const SignedMatrix&)>
void BM_product(benchmark::State& state) {
  const auto a = random_matrix(std::size_t(state.range(0)));
  const auto b = random_matrix(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Product(a, b));
}

// Petersen graph minus r edges, so m = 15 - r.
Graph petersen_minus(std::size_t r) {
  const Graph p = Graph::petersen();
  return Graph(10, std::vector<Edge>(p.edges().begin() + std::ptrdiff_t(r), p.edges().end()));
}

template <std::vector<std::uint32_t> (*Masks)(const Graph&)>
void BM_switching(benchmark::State& state) {
  const Graph g = state.range(0) == 15 ? Graph::petersen() : petersen_minus(std::size_t(15 - state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Masks(g));
}

template <std::size_t (*Count)(std::size_t, const std::vector<bool>&)>
void BM_parity(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  std::mt19937_64 rng(20170923);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> member(n * n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) member[(a * n + b) * n + c] = coin(rng);
  for (auto _ : state) benchmark::DoNotOptimize(Count(n, member));
}

}  // namespace

BENCHMARK(BM_gram<kernels::serial::gram>)->Name("gram/serial")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram<kernels::parallel::gram>)->Name("gram/parallel")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product<kernels::serial::product>)->Name("product/serial")->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product<kernels::parallel::product>)->Name("product/parallel")->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_switching<serial::switching_class_masks>)->Name("switching/serial")->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_switching<parallel::switching_class_masks>)->Name("switching/parallel")->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parity<serial::odd_quadruple_count>)->Name("parity/serial")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parity<parallel::odd_quadruple_count>)->Name("parity/parallel")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
