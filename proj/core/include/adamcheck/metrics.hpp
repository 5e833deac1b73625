#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "adamcheck/optimizer.hpp"
#include "adamcheck/problems.hpp"
#include "adamcheck/vec.hpp"

namespace adamcheck {

// Pathwise inner-product performance measures. m_inner pairs the momentum
// after step k with the iterate the step started from; both series are
// recorded for k >= 1.
double m_inner(const Vec& m, const Vec& theta, const Vec& theta_star);
double grad_inner(const Vec& grad, const Vec& theta, const Vec& theta_ref);
// Convenience overload that evaluates the full gradient itself.
double grad_inner(const Problem& p, const Vec& theta, const Vec& theta_ref);

// Mean of series[0..K-1], where series[0] holds step k = 1. Throws
// std::invalid_argument when K = 0 or K exceeds the series length.
double running_mean(std::span<const double> series, std::size_t K);

struct MeanStderr {
  double mean;
  double se;  // sample standard deviation (n-1) / sqrt(n)
};

// Across-seed Monte Carlo estimate. Needs at least 2 values.
MeanStderr monte_carlo_expectation(std::span<const double> per_seed_values);

// Realized constants of one trajectory, accumulated record by record
// against a fixed reference point. The distance maxima fold in both
// endpoints of each step so the final iterate is covered.
struct TrajectoryStats {
  double G_hat = 0.0;       // max ||full gradient at theta_k||
  double B_hat = 0.0;       // max ||batch gradient||
  double D_hat = 0.0;       // max ||theta_k - theta_ref||
  double Dtilde_hat = 0.0;  // max over k of max_i (theta_k_i - theta_ref_i)^2
  double M_hat = 0.0;       // max over k of max_i g_k_i^2
  double vstar_hat = std::numeric_limits<double>::infinity();
  // ^ min over all records of min_i raw v_k_i (pre bias-correction)
  double sigma2_over_b = 0.0;  // filled by the caller, not from records
  std::uint64_t dim = 0;       // set from the first record; 0 = no records yet
  std::uint64_t records = 0;

  // vstar_hat <= 0 makes every 1/vstar bound term infinite. Reported as a
  // flag, never an error.
  bool vstar_degenerate() const { return !(vstar_hat > 0.0); }
};

// Folds one step record into the stats. The overload taking the full
// gradient avoids recomputing it when the caller already has it.
void update_stats(TrajectoryStats& st, const StepRecord& rec,
                  const Vec& full_grad_before, const Vec& theta_ref);
void update_stats(TrajectoryStats& st, const StepRecord& rec, const Problem& p,
                  const Vec& theta_ref);

// Across-seed pooling: maxima of maxima, minimum of vstar.
TrajectoryStats pool_stats(std::span<const TrajectoryStats> per_seed);

// One logged row of the measure series; mirrors the CSV schema.
struct MeasureRow {
  std::uint64_t k;
  double m_inner;
  double grad_inner;
  double mean_m_inner;   // running mean of m_inner over 1..k
  double mean_grad_inner;
  double grad_norm_sq;   // ||full gradient at theta_k||^2, reference only
  double alpha_k;
  double beta1_k;
  double beta2_k;
};

// Accumulates the per-step measures for one seed. Every step k >= 1 feeds
// the running means; rows are stored at k = 1, 1+stride, 1+2*stride, ...
// plus every requested checkpoint.
class MeasureAccumulator {
 public:
  MeasureAccumulator(std::uint64_t stride, std::vector<std::uint64_t> checkpoints);

  void push(std::uint64_t k, double m_inner_v, double grad_inner_v,
            double grad_norm_sq, const StepHyperparams& hp);

  const std::vector<MeasureRow>& rows() const { return rows_; }
  // Rows at the requested checkpoints, in checkpoint order; only the
  // checkpoints <= the last pushed k are present.
  const std::vector<MeasureRow>& checkpoint_rows() const { return checks_; }
  std::uint64_t last_k() const { return last_k_; }
  double mean_m_inner() const;
  double mean_grad_inner() const;

 private:
  std::uint64_t stride_;
  std::vector<std::uint64_t> checkpoints_;
  std::vector<MeasureRow> rows_;
  std::vector<MeasureRow> checks_;
  double sum_m_ = 0.0, sum_g_ = 0.0;
  std::uint64_t count_ = 0, last_k_ = 0;
};

}  // namespace adamcheck
