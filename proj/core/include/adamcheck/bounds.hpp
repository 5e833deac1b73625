// Closed-form upper bounds on the inner-product measures, one evaluator per
// published theorem. Every named constant is exposed as an inspectable term
// so reports and tests can check them individually.
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "adamcheck/metrics.hpp"
#include "adamcheck/schedules.hpp"

namespace adamcheck {

// Theorem selector. Each bound applies to exactly one schedule family:
//
//   C1    per-step bound, const_all
//   Cor1  k -> infinity form of C1 (C2 replaced by the k-free C2bar)
//   D1    per-step bound, dim_all
//   C2    averaged bound, const_all, assumes the running-max step
//   C3    averaged bound, const_alpha_decay_beta2, assumes the running max
//   D2    averaged bound, dim_alpha_const_beta, assumes the running max
//   D3    averaged bound, dim_alpha_decay_beta2, assumes the running max
enum class Theorem { C1, Cor1, D1, C2, C3, D2, D3 };

// "c1", "cor1", "d1", "c2", "c3", "d2", "d3".
std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& name);

// The averaged bounds (C2..D3) are stated for trajectories whose corrected
// second moment is monotone, i.e. runs with StepConfig::max_correction on.
bool requires_max_correction(Theorem t);

// Theorems whose schedule family matches, in the order above.
std::vector<Theorem> applicable_theorems(ScheduleFamily family);

// One named constant of a bound. A term can enter the momentum-measure
// total, the gradient-measure total, or both (D4 enters both in D1).
struct BoundTerm {
  std::string name;  // published symbol: "C1", "C2bar", "D5", ...
  double value = 0.0;
  bool in_m_total = false;
  bool in_grad_total = false;
};

struct BoundReport {
  Theorem theorem = Theorem::C1;
  std::uint64_t horizon = 0;  // step k for C1/D1, horizon K for the averaged
                              // bounds, unused (0) for Cor1
  std::vector<BoundTerm> terms;
  double total_m = 0.0;     // bounds E[m_k^T (theta_k - theta*)]
  double total_grad = 0.0;  // bounds E[grad f(theta_k)^T (theta_k - theta)]

  // vstar_hat <= 0: every 1/vstar term is infinite. Kept as a flag so sweeps
  // over degenerate configurations still complete.
  bool vstar_degenerate = false;
  // Structurally undefined at this horizon (k^{b1} = 1 in D1, beta2 = 1 in
  // C2/D2). Terms are infinite, not an error.
  bool undefined = false;
  // Averaged bound evaluated on a run without the running-max step; the
  // caller sets this, evaluation itself does not know how the run was made.
  bool informational = false;

  // Measured Monte Carlo values, filled in by the runner when available.
  double measured_m = std::numeric_limits<double>::quiet_NaN();
  double measured_grad = std::numeric_limits<double>::quiet_NaN();
  double slack_m() const { return total_m - measured_m; }
  double slack_grad() const { return total_grad - measured_grad; }

  // Lookup by published symbol; throws std::out_of_range if absent.
  const BoundTerm& term(const std::string& name) const;
};

// Per-step bound for the all-constant schedule, any k >= 0. Terms C1..C5
// with totals C1+C2+C3+C4 (momentum) and C1+C2+C3+C5 (gradient).
BoundReport bound_c1(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t k);

// Limit form: C2 is replaced by C2bar = alpha (sigma^2/b + G^2) / (2 sqrt(v*)
// beta1), which no longer depends on k.
BoundReport bound_cor1(const TrajectoryStats& stats, const ScheduleSpec& spec);

// Per-step bound for the all-diminishing schedule, k >= 1. Terms D1..D5 with
// totals D1+D2+D3+D4 (momentum) and D1+D2+D3+D4+D5 (gradient). At k = 1 the
// 1/(k^{b1} - 1) terms are infinite and the report is flagged undefined.
BoundReport bound_d1(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t k);

// Averaged bounds over steps 1..K, K >= 1: they bound the running mean of
// the measures. Leading terms vary per family; each total ends with
// + C3 + C4 (momentum) or + C3 + C5 (gradient).
BoundReport bound_c2(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t K);
BoundReport bound_c3(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t K);
BoundReport bound_d2(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t K);
BoundReport bound_d3(const TrajectoryStats& stats, const ScheduleSpec& spec,
                     std::uint64_t K);

// Dispatcher form used by the runner.
struct BoundInputs {
  TrajectoryStats stats;
  ScheduleSpec spec;
  std::uint64_t horizon = 1;  // ignored by Cor1
  Theorem theorem = Theorem::C1;
};

// Throws std::invalid_argument when the schedule family does not match
// the theorem, the horizon violates the bound's precondition, or the
// averaged bounds are asked for with stats.dim == 0.
BoundReport evaluate_bound(const BoundInputs& in);

}  // namespace adamcheck
