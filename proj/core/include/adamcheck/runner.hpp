// Experiment orchestration: run the optimizer over a stochastic oracle for a
// list of seeds, aggregate the measures across seeds, evaluate the matching
// bounds, and render verdicts. Pure in-memory API; file output is separate.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adamcheck/bounds.hpp"
#include "adamcheck/metrics.hpp"
#include "adamcheck/optimizer.hpp"
#include "adamcheck/schedules.hpp"
#include "adamcheck/vec.hpp"

namespace adamcheck {

struct RunConfig {
  std::string problem = "quadratic";
  std::size_t dim = 0;            // 0 = the problem's default dimension
  double sigma2 = 1.0;            // oracle noise; finite_sum ignores it
  std::size_t n_components = 16;  // finite_sum only

  ScheduleSpec schedule;
  StepConfig step;
  std::size_t batch = 16;
  std::uint64_t steps = 1000;  // K; the run performs updates k = 0..K and
                               // records measures for k = 1..K

  // Stream for seed index i is seeded with derive_seed(master_seed, i), so
  // growing the list never perturbs earlier seeds.
  std::uint64_t master_seed = 12345;
  std::vector<std::uint64_t> seed_indices = {0};

  std::optional<Vec> theta0;     // empty = problem default start
  std::optional<Vec> theta_ref;  // reference point of the gradient measure;
                                 // empty = the stationary point
  std::uint64_t stride = 0;      // logging stride; 0 = max(1, steps/1000)
};

// Checks everything that does not need the problem instance: steps >= 1,
// at least one seed, batch >= 1, a valid schedule, epsilon >= 0, sigma2 >= 0.
void validate_run_config(const RunConfig& cfg);

std::uint64_t resolved_stride(const RunConfig& cfg);

// Decades {1, 10, 100, ...} up to K, plus K itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t K);

struct SeedResult {
  std::uint64_t seed_index = 0;
  std::uint64_t stream_seed = 0;

  bool failed = false;       // rows below stop at the failing step
  std::string error;
  std::uint64_t error_step = 0;

  std::vector<MeasureRow> rows;         // stride grid
  std::vector<MeasureRow> checkpoints;  // checkpoint steps
  TrajectoryStats stats;      // distances taken against the stationary point
  TrajectoryStats stats_ref;  // against the reference point; only filled
                              // when the reference is a different point
  bool vhat_monotone = true;  // re-checked from records when the running
                              // max is on
  std::uint64_t sign_violations = 0;  // steps k >= 1 where the momentum
                                      // inner product went negative
  Vec theta_final;            // iterate after the last completed update
  double final_value = 0.0;   // objective there
};

// Across-seed mean and standard error of the four measure series at one
// step. With a single contributing seed the standard error is reported
// as 0 (there is nothing to estimate it from).
struct AggregatedRow {
  std::uint64_t k = 0;
  MeanStderr m_inner{};
  MeanStderr grad_inner{};
  MeanStderr mean_m_inner{};
  MeanStderr mean_grad_inner{};
  std::size_t n = 0;  // seeds contributing
};

// One bound-vs-measurement comparison. The pass rule is
// measured <= bound + 3 * standard error; an infinite bound passes
// trivially and is marked undefined.
struct DominationCheck {
  Theorem theorem = Theorem::C1;
  std::uint64_t k = 0;   // where the measurement was taken
  bool averaged = false; // compares the running mean, not the step value
  bool informational = false;
  bool undefined = false;
  double measured_m = 0, se_m = 0, bound_m = 0;
  double measured_grad = 0, se_grad = 0, bound_grad = 0;
  bool pass_m = true, pass_grad = true;
};

struct RunReport {
  RunConfig config;
  std::uint64_t stride = 1;  // resolved value
  std::vector<std::uint64_t> checkpoints;

  Vec theta_star;  // stationary point of the problem
  Vec theta_ref;   // resolved reference point
  Vec theta0;      // resolved start, i.e. the k = 0 state
  bool distinct_ref = false;  // theta_ref differs from theta_star
  double sigma2 = 0.0;        // the problem's actual oracle variance

  std::vector<SeedResult> seeds;
  std::size_t failed_seeds = 0;

  // Pooled over the successful seeds. pooled uses theta_star distances;
  // pooled_ref uses theta_ref ones and equals pooled when not distinct.
  TrajectoryStats pooled;
  TrajectoryStats pooled_ref;

  std::vector<AggregatedRow> aggregated;  // stride grid plus checkpoints

  // Bounds at every checkpoint for each theorem of the configured family,
  // evaluated with the pooled stats, measured values filled in. The
  // momentum-measure totals are the meaningful side of `bounds`; when the
  // reference point is distinct, `bounds_ref` carries the gradient side.
  std::vector<BoundReport> bounds;
  std::vector<BoundReport> bounds_ref;  // empty unless distinct_ref

  std::vector<DominationCheck> dominations;
  bool monotone_vhat_checked = false;  // running max was on and re-verified
  bool monotone_vhat_ok = true;
  bool vstar_positive = false;
  std::uint64_t sign_violations = 0;  // summed over successful seeds;
                                      // diagnostic only, no verdict

  // Conjunction of the non-informational verdicts.
  bool all_pass() const;

  const AggregatedRow& aggregated_at(std::uint64_t k) const;  // out_of_range
};

RunReport run_experiment(const RunConfig& cfg);

// CSV of one seed's logged rows: header plus one line per row, every double
// printed with round-trip precision.
std::string measure_csv(const std::vector<MeasureRow>& rows);

std::string report_json(const RunReport& rep);

// Writes report.json and/or measures_seed<i>.csv under out_dir, creating
// it if needed. format is "csv", "json", or "both". Returns written paths.
std::vector<std::string> write_report_files(const RunReport& rep,
                                            const std::string& out_dir,
                                            const std::string& format);

// Hyperparameter grid around a base config. Empty axes keep the base
// value; cells are the cartesian product in the listed order (family
// outermost, batch innermost).
struct SweepGrid {
  std::vector<ScheduleFamily> families;
  std::vector<double> alphas;
  std::vector<double> beta1s;
  std::vector<double> beta2s;  // constant-beta2 families
  std::vector<double> b2s;     // decaying-beta2 families
  std::vector<std::size_t> batches;
};

struct SweepRow {
  std::string label;  // varying axes only, "beta1=0.9,batch=16"
  ScheduleFamily family = ScheduleFamily::ConstAll;
  double alpha = 0, beta1 = 0, beta2 = 0, b2 = 0;
  std::size_t batch = 0;
  bool failed = false;
  std::string error;
  // Running means of the two measures at K, with standard errors.
  double mean_m_at_K = 0, se_m_at_K = 0;
  double mean_grad_at_K = 0, se_grad_at_K = 0;
  // The beta1 tail constant (1-beta1)/beta1 * D * G from the pooled stats;
  // NaN for the all-diminishing family, whose beta1 varies with k.
  double C3 = 0;
};

struct TrendDiagnostic {
  std::string axis;      // "beta1" or "batch"
  std::string quantity;  // "C3" or "mean_m_inner_at_K"
  bool strictly_decreasing = false;
};

struct SweepResult {
  std::vector<RunReport> reports;  // cell order
  std::vector<SweepRow> table;
  // Filled when exactly one axis varies and no cell failed.
  std::vector<TrendDiagnostic> trends;
};

SweepResult sweep(const RunConfig& base, const SweepGrid& grid);

std::string sweep_json(const SweepResult& res);

// cell<i>/ subdirectories with per-cell files, plus sweep.json with the
// comparison table and trend diagnostics.
std::vector<std::string> write_sweep_files(const SweepResult& res,
                                           const std::string& out_dir,
                                           const std::string& format);

}  // namespace adamcheck
