#include "adamcheck/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adamcheck {

double m_inner(const Vec& m, const Vec& theta, const Vec& theta_star) {
  if (m.size() != theta.size() || theta.size() != theta_star.size())
    throw std::invalid_argument("m_inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    s += m[i] * (theta[i] - theta_star[i]);
  return s;
}

double grad_inner(const Vec& grad, const Vec& theta, const Vec& theta_ref) {
  if (grad.size() != theta.size() || theta.size() != theta_ref.size())
    throw std::invalid_argument("grad_inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i)
    s += grad[i] * (theta[i] - theta_ref[i]);
  return s;
}

double grad_inner(const Problem& p, const Vec& theta, const Vec& theta_ref) {
  if (theta.size() != p.dim())
    throw std::invalid_argument("grad_inner: dimension mismatch");
  return grad_inner(p.full_gradient(theta), theta, theta_ref);
}

double running_mean(std::span<const double> series, std::size_t K) {
  if (K == 0 || K > series.size()) {
    std::ostringstream os;
    os << "running_mean: K = " << K << " out of range for series of length "
       << series.size();
    throw std::invalid_argument(os.str());
  }
  double s = 0.0;
  for (std::size_t i = 0; i < K; ++i) s += series[i];
  return s / (double)K;
}

MeanStderr monte_carlo_expectation(std::span<const double> vals) {
  const std::size_t n = vals.size();
  if (n < 2)
    throw std::invalid_argument(
        "monte_carlo_expectation: need at least 2 values");
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= (double)n;
  double ss = 0.0;
  for (double v : vals) ss += (v - mean) * (v - mean);
  double sd = std::sqrt(ss / (double)(n - 1));
  return {mean, sd / std::sqrt((double)n)};
}

namespace {

void fold_theta(TrajectoryStats& st, const Vec& theta, const Vec& ref) {
  double d2 = 0.0, maxsq = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    double di = theta[i] - ref[i];
    d2 += di * di;
    maxsq = std::max(maxsq, di * di);
  }
  st.D_hat = std::max(st.D_hat, std::sqrt(d2));
  st.Dtilde_hat = std::max(st.Dtilde_hat, maxsq);
}

}  // namespace

void update_stats(TrajectoryStats& st, const StepRecord& rec,
                  const Vec& full_grad_before, const Vec& theta_ref) {
  if (rec.theta_before.size() != theta_ref.size())
    throw std::invalid_argument("update_stats: reference dimension mismatch");
  if (st.dim == 0)
    st.dim = rec.theta_before.size();
  else if (st.dim != rec.theta_before.size())
    throw std::invalid_argument("update_stats: record dimension mismatch");
  st.G_hat = std::max(st.G_hat, norm(full_grad_before));
  st.B_hat = std::max(st.B_hat, norm(rec.grad));
  for (double gi : rec.grad) st.M_hat = std::max(st.M_hat, gi * gi);
  fold_theta(st, rec.theta_before, theta_ref);
  fold_theta(st, rec.theta_after, theta_ref);
  for (double vi : rec.v) st.vstar_hat = std::min(st.vstar_hat, vi);
  st.records += 1;
}

void update_stats(TrajectoryStats& st, const StepRecord& rec, const Problem& p,
                  const Vec& theta_ref) {
  update_stats(st, rec, p.full_gradient(rec.theta_before), theta_ref);
}

TrajectoryStats pool_stats(std::span<const TrajectoryStats> per_seed) {
  if (per_seed.empty())
    throw std::invalid_argument("pool_stats: no stats to pool");
  TrajectoryStats out = per_seed[0];
  for (std::size_t i = 1; i < per_seed.size(); ++i) {
    const TrajectoryStats& s = per_seed[i];
    out.G_hat = std::max(out.G_hat, s.G_hat);
    out.B_hat = std::max(out.B_hat, s.B_hat);
    out.D_hat = std::max(out.D_hat, s.D_hat);
    out.Dtilde_hat = std::max(out.Dtilde_hat, s.Dtilde_hat);
    out.M_hat = std::max(out.M_hat, s.M_hat);
    out.vstar_hat = std::min(out.vstar_hat, s.vstar_hat);
    if (out.dim == 0)
      out.dim = s.dim;
    else if (s.dim != 0 && s.dim != out.dim)
      throw std::invalid_argument("pool_stats: dimension mismatch");
    out.records += s.records;
  }
  return out;
}

MeasureAccumulator::MeasureAccumulator(std::uint64_t stride,
                                       std::vector<std::uint64_t> checkpoints)
    : stride_(stride), checkpoints_(std::move(checkpoints)) {
  if (stride_ == 0)
    throw std::invalid_argument("MeasureAccumulator: stride must be positive");
  std::sort(checkpoints_.begin(), checkpoints_.end());
}

void MeasureAccumulator::push(std::uint64_t k, double m_inner_v,
                              double grad_inner_v, double grad_norm_sq,
                              const StepHyperparams& hp) {
  if (k != last_k_ + 1) {
    std::ostringstream os;
    os << "MeasureAccumulator: expected step " << last_k_ + 1 << ", got " << k;
    throw std::invalid_argument(os.str());
  }
  last_k_ = k;
  sum_m_ += m_inner_v;
  sum_g_ += grad_inner_v;
  count_ += 1;
  MeasureRow row{k,
                 m_inner_v,
                 grad_inner_v,
                 sum_m_ / (double)count_,
                 sum_g_ / (double)count_,
                 grad_norm_sq,
                 hp.alpha_k,
                 hp.beta1_k,
                 hp.beta2_k};
  if ((k - 1) % stride_ == 0) rows_.push_back(row);
  if (std::binary_search(checkpoints_.begin(), checkpoints_.end(), k))
    checks_.push_back(row);
}

double MeasureAccumulator::mean_m_inner() const {
  if (count_ == 0)
    throw std::logic_error("MeasureAccumulator: no steps pushed");
  return sum_m_ / (double)count_;
}

double MeasureAccumulator::mean_grad_inner() const {
  if (count_ == 0)
    throw std::logic_error("MeasureAccumulator: no steps pushed");
  return sum_g_ / (double)count_;
}

}  // namespace adamcheck
