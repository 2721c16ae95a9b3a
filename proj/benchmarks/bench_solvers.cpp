#include <benchmark/benchmark.h>

#include <cmath>

#include "wirebarrier/branch.hpp"
#include "wirebarrier/critical.hpp"
#include "wirebarrier/impurity.hpp"
#include "wirebarrier/oned.hpp"
#include "wirebarrier/trajectory.hpp"

using namespace wirebarrier;

namespace {
BarrierParams reference_params(double a = 2.0) { return {30.0, 0.2, std::sqrt(0.03), a}; }
}  // namespace

static void BM_SolveSaddle(benchmark::State& state) {
  const BarrierParams p = reference_params();
  for (auto _ : state) {
    auto sp = solve_saddle(0.8, Complex(0.3, 0), p, Complex(0.9, -0.3));
    benchmark::DoNotOptimize(sp.v);
  }
}
BENCHMARK(BM_SolveSaddle);

static void BM_Action(benchmark::State& state) {
  const BarrierParams p = reference_params();
  for (auto _ : state) {
    auto act = action(0.8, Complex(0, 0), p, Complex(0.62, 0));
    benchmark::DoNotOptimize(act.sigma);
  }
}
BENCHMARK(BM_Action);

static void BM_CriticalWidth(benchmark::State& state) {
  const BarrierParams p = reference_params();
  for (auto _ : state) {
    auto cw = find_critical_width(p);
    benchmark::DoNotOptimize(cw.a0);
  }
}
BENCHMARK(BM_CriticalWidth);

static void BM_Penetration(benchmark::State& state) {
  const BarrierParams p = reference_params();
  for (auto _ : state) {
    auto r = penetration(p);
    benchmark::DoNotOptimize(r.w_log);
  }
}
BENCHMARK(BM_Penetration);

static void BM_Sigma1(benchmark::State& state) {
  ImpurityParams ip;
  ip.k = std::sqrt(0.45);
  ip.l = 0.8;
  ip.a_imp = 0.05;
  ip.u = 1e-3 * std::exp(-(4.0 * ip.k_sq() - ip.l * ip.l) / (ip.a_imp * ip.a_imp));
  for (auto _ : state) {
    auto s = sigma1(1.5, 2.0 * ip.k * std::sqrt(0.5), ip);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Sigma1);

static void BM_CoshReflection(benchmark::State& state) {
  for (auto _ : state) {
    auto r = reflect_cosh_barrier(1.0, 1.0 / 1.5, double(state.range(0)));
    benchmark::DoNotOptimize(r.R_exact_mag);
  }
}
BENCHMARK(BM_CoshReflection)->Arg(10)->Arg(15);

static void BM_TraceBranches(benchmark::State& state) {
  const BarrierParams p = reference_params();
  TraceOptions opt;
  opt.x_max = 1.6;
  for (auto _ : state) {
    auto curves = branches_at(p, 0.0, opt);
    benchmark::DoNotOptimize(curves.size());
  }
}
BENCHMARK(BM_TraceBranches);

BENCHMARK_MAIN();
