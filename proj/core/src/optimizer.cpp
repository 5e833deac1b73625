#include "adamcheck/optimizer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace adamcheck {

OptimizerState OptimizerState::init(Vec theta0) {
  if (theta0.empty())
    throw std::invalid_argument("init: theta0 must be non-empty");
  if (!all_finite(theta0))
    throw std::invalid_argument("init: theta0 must be finite");
  OptimizerState s;
  const std::size_t d = theta0.size();
  s.theta = std::move(theta0);
  s.m.assign(d, 0.0);
  s.v.assign(d, 0.0);
  s.vhat_max.assign(d, 0.0);
  s.k = 0;
  return s;
}

StepRecord adam_step(OptimizerState& s, const Vec& grad,
                     const StepHyperparams& hp, const StepConfig& cfg) {
  const std::size_t d = s.theta.size();
  if (grad.size() != d) {
    std::ostringstream os;
    os << "adam_step: gradient dimension " << grad.size()
       << " does not match state dimension " << d;
    throw std::invalid_argument(os.str());
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!std::isfinite(grad[i])) {
      std::ostringstream os;
      os << "adam_step: non-finite gradient at coordinate " << i << " (step "
         << s.k << ")";
      throw std::runtime_error(os.str());
    }
  }
  if (!(hp.tilde_beta1_k > 0.0) || !(hp.tilde_beta2_k > 0.0)) {
    std::ostringstream os;
    os << "adam_step: bias correction factors must be positive (step " << s.k
       << ")";
    throw std::domain_error(os.str());
  }

  StepRecord rec;
  rec.k = s.k;
  rec.hp = hp;
  rec.theta_before = s.theta;
  rec.grad = grad;
  rec.m.resize(d);
  rec.v.resize(d);
  rec.vhat.resize(d);
  rec.theta_after.resize(d);

  const double b1 = hp.beta1_k, b2 = hp.beta2_k;
  for (std::size_t i = 0; i < d; ++i)
    rec.m[i] = b1 * s.m[i] + (1.0 - b1) * grad[i];
  for (std::size_t i = 0; i < d; ++i)
    rec.v[i] = b2 * s.v[i] + (1.0 - b2) * grad[i] * grad[i];
  for (std::size_t i = 0; i < d; ++i) {
    const double mhat = rec.m[i] / hp.tilde_beta1_k;
    double vhat = rec.v[i] / hp.tilde_beta2_k;
    if (cfg.max_correction && s.vhat_max[i] > vhat) vhat = s.vhat_max[i];
    rec.vhat[i] = vhat;
    const double denom = std::sqrt(vhat) + cfg.epsilon;
    if (denom == 0.0) {
      std::ostringstream os;
      os << "adam_step: zero second-moment denominator at coordinate " << i
         << " with epsilon = 0 (step " << s.k << ")";
      throw std::domain_error(os.str());
    }
    rec.theta_after[i] = s.theta[i] - hp.alpha_k * mhat / denom;
  }

  // Commit only now: a throw above leaves the state untouched.
  s.theta = rec.theta_after;
  s.m = rec.m;
  s.v = rec.v;
  if (cfg.max_correction) s.vhat_max = rec.vhat;
  s.k += 1;
  return rec;
}

}  // namespace adamcheck
