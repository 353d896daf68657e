#include <benchmark/benchmark.h>

#include "w4/classic.hpp"
#include "w4/solver.hpp"

namespace {

void BM_Svd2(benchmark::State& state) {
  const w4::Mat2 j{1e4, 1e4, -0.5, -0.3};
  for (auto _ : state) {
    auto s = w4::svd2(j);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Svd2);

void BM_W4svStep(benchmark::State& state) {
  const w4::W4Config cfg;
  const w4::Problem& p = w4::registry(w4::ProblemId::Powell);
  w4::W4State s{{0.0, 1.0}, {0.0, 0.0}, 0};
  for (auto _ : state) {
    const auto f = p.residual(s.x);
    const auto pre = w4::w4sv_preconditioners(p.jacobian(s.x), cfg);
    auto next = w4::w4_step(s, f, pre, 0.5);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_W4svStep);

void BM_SolvePowellW4sv(benchmark::State& state) {
  const w4::Problem& p = w4::registry(w4::ProblemId::Powell);
  w4::W4Config cfg;
  cfg.dtau = 0.5;
  for (auto _ : state) {
    auto r = w4::solve_w4sv(p, {0.0, 1.0}, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolvePowellW4sv);

void BM_SolvePowellNewton(benchmark::State& state) {
  const w4::Problem& p = w4::registry(w4::ProblemId::Powell);
  const w4::W4Config cfg;
  for (auto _ : state) {
    auto r = w4::solve_newton(p, {0.0, 1.0}, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolvePowellNewton);

}  // namespace

BENCHMARK_MAIN();
