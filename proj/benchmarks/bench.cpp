#include <benchmark/benchmark.h>

#include <cmath>
#include <string>

#include "unigamma/contour.hpp"
#include "unigamma/gamma.hpp"
#include "unigamma/oracle.hpp"

namespace {

using unigamma::Complex;

const Complex kPoints[] = {{1.0, 0.0}, {-3.5, 0.0}, {0.5, 3.0}, {-4.5, 4.5}, {2.0, -10.0}};

void BM_G(benchmark::State& state) {
  const Complex z = kPoints[state.range(0)];
  long evals = 0;
  for (auto _ : state) {
    const auto r = unigamma::g_integral(z);
    benchmark::DoNotOptimize(r.value);
    evals = r.evaluations;
  }
  state.counters["evaluations"] = static_cast<double>(evals);
  state.SetLabel(std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i");
}
BENCHMARK(BM_G)->DenseRange(0, 4);

void BM_G_tol(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unigamma::g_integral({0.5, 3.0}, {.tol = tol, .rel_tol = tol}).value);
  }
}
BENCHMARK(BM_G_tol)->DenseRange(4, 12, 4);

void BM_digamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::digamma({0.5, 3.0}).value);
}
BENCHMARK(BM_digamma);

void BM_euler(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::euler_mascheroni().value);
}
BENCHMARK(BM_euler);

void BM_laplace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::laplace_recip_gamma({3.0, 2.0}).value);
}
BENCHMARK(BM_laplace);

void BM_contour_loop(benchmark::State& state) {
  unigamma::ContourSpec s;
  s.half_width = 8.0;
  s.tol = 1e-10;
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::contour_loop({-2.0, 1.0}, s).loop_sum);
}
BENCHMARK(BM_contour_loop);

void BM_lanczos(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::lanczos_gamma({0.5, 3.0}));
}
BENCHMARK(BM_lanczos);

void BM_oracle_digamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unigamma::oracle_digamma({0.5, 3.0}));
}
BENCHMARK(BM_oracle_digamma);

}  // namespace

BENCHMARK_MAIN();
