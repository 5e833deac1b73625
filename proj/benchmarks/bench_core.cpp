#include <benchmark/benchmark.h>

#include "adamcheck/bounds.hpp"
#include "adamcheck/optimizer.hpp"
#include "adamcheck/problems.hpp"
#include "adamcheck/rng.hpp"
#include "adamcheck/schedules.hpp"

namespace {

using namespace adamcheck;

void BM_AdamStep(benchmark::State& state) {
  const std::size_t d = (std::size_t)state.range(0);
  ScheduleSpec spec;  // constant family defaults
  StepConfig sc;
  Rng rng(1);
  Vec theta0(d, 1.0), g(d);
  for (double& x : g) x = rng.uniform_sym(1.0);
  auto st = OptimizerState::init(theta0);
  auto hp = schedule_at(spec, 0);
  for (auto _ : state) {
    auto rec = adam_step(st, g, hp, sc);
    benchmark::DoNotOptimize(rec.theta_after.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t)d);
}
BENCHMARK(BM_AdamStep)->Arg(2)->Arg(16)->Arg(128)->Arg(1024);

void BM_ScheduleAt(benchmark::State& state, ScheduleFamily fam) {
  ScheduleSpec spec;
  spec.family = fam;
  spec.alpha = 0.01;
  spec.beta1 = 0.9;
  spec.beta2 = 0.999;
  spec.a = 0.5;
  spec.b1 = 1.0;
  spec.b2 = 1.0;
  if (fam == ScheduleFamily::DimAll) {
    spec.a = 0.75;
    spec.b1 = 0.5;
  } else if (fam == ScheduleFamily::DimAlphaDecayBeta2) {
    spec.a = 0.25;
  }
  spec.validate();
  std::uint64_t k = 1;
  for (auto _ : state) {
    auto hp = schedule_at(spec, k);
    benchmark::DoNotOptimize(hp);
    k = k % 100000 + 1;
  }
}
BENCHMARK_CAPTURE(BM_ScheduleAt, const_all, ScheduleFamily::ConstAll);
BENCHMARK_CAPTURE(BM_ScheduleAt, dim_all, ScheduleFamily::DimAll);
BENCHMARK_CAPTURE(BM_ScheduleAt, const_alpha_decay_beta2,
                  ScheduleFamily::ConstAlphaDecayBeta2);
BENCHMARK_CAPTURE(BM_ScheduleAt, dim_alpha_const_beta,
                  ScheduleFamily::DimAlphaConstBeta);
BENCHMARK_CAPTURE(BM_ScheduleAt, dim_alpha_decay_beta2,
                  ScheduleFamily::DimAlphaDecayBeta2);

void BM_BatchOracle(benchmark::State& state, const char* problem) {
  auto p = make_problem(problem, 0, 1.0, 16);
  const std::uint64_t batch = (std::uint64_t)state.range(0);
  Rng rng(7);
  Vec theta = p->default_theta0();
  for (auto _ : state) {
    Vec g = p->sample_batch_gradient(theta, batch, rng);
    benchmark::DoNotOptimize(g.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t)batch);
}
BENCHMARK_CAPTURE(BM_BatchOracle, quadratic, "quadratic")
    ->Arg(1)
    ->Arg(16)
    ->Arg(256);
BENCHMARK_CAPTURE(BM_BatchOracle, finite_sum, "finite_sum")
    ->Arg(1)
    ->Arg(16)
    ->Arg(256);

ScheduleSpec spec_for(Theorem t) {
  ScheduleSpec s;
  s.alpha = 0.01;
  s.beta1 = 0.9;
  s.beta2 = 0.999;
  s.a = 0.5;
  s.b1 = 1.0;
  s.b2 = 1.0;
  switch (t) {
    case Theorem::C1:
    case Theorem::Cor1:
    case Theorem::C2:
      s.family = ScheduleFamily::ConstAll;
      break;
    case Theorem::D1:
      s.family = ScheduleFamily::DimAll;
      s.a = 0.75;
      s.b1 = 0.5;
      break;
    case Theorem::C3:
      s.family = ScheduleFamily::ConstAlphaDecayBeta2;
      break;
    case Theorem::D2:
      s.family = ScheduleFamily::DimAlphaConstBeta;
      break;
    case Theorem::D3:
      s.family = ScheduleFamily::DimAlphaDecayBeta2;
      s.a = 0.25;
      break;
  }
  s.validate();
  return s;
}

void BM_BoundEval(benchmark::State& state, Theorem t) {
  BoundInputs in;
  in.stats.G_hat = 1.5;
  in.stats.B_hat = 2.0;
  in.stats.D_hat = 3.0;
  in.stats.Dtilde_hat = 3.0;
  in.stats.M_hat = 2.0;
  in.stats.vstar_hat = 0.04;
  in.stats.sigma2_over_b = 0.25;
  in.stats.dim = 4;
  in.stats.records = 1;
  in.spec = spec_for(t);
  in.horizon = 1000;
  in.theorem = t;
  for (auto _ : state) {
    auto rep = evaluate_bound(in);
    benchmark::DoNotOptimize(rep.total_m);
  }
}
BENCHMARK_CAPTURE(BM_BoundEval, c1, Theorem::C1);
BENCHMARK_CAPTURE(BM_BoundEval, cor1, Theorem::Cor1);
BENCHMARK_CAPTURE(BM_BoundEval, d1, Theorem::D1);
BENCHMARK_CAPTURE(BM_BoundEval, c2, Theorem::C2);
BENCHMARK_CAPTURE(BM_BoundEval, c3, Theorem::C3);
BENCHMARK_CAPTURE(BM_BoundEval, d2, Theorem::D2);
BENCHMARK_CAPTURE(BM_BoundEval, d3, Theorem::D3);

}  // namespace

BENCHMARK_MAIN();
