#pragma once

#include <cstdint>

#include "adamcheck/schedules.hpp"
#include "adamcheck/vec.hpp"

namespace adamcheck {

// Per-step knobs that are not part of the schedule.
//
// epsilon is added to sqrt(vhat) in the update denominator. The analyzed
// algorithm has no epsilon; the default 1e-8 matches common practice, and
// epsilon = 0 reproduces the analyzed update exactly but makes a zero
// second-moment coordinate a hard error instead of a huge step.
struct StepConfig {
  double epsilon = 1e-8;
  bool max_correction = false;
};

struct OptimizerState {
  Vec theta;
  Vec m;  // first moment, pre bias-correction
  Vec v;  // second moment, pre bias-correction
  // Running maximum of the bias-corrected second moment. Tracking the
  // corrected value (not raw v) is what makes the enforced sequence
  // monotone even when beta2_k varies step to step.
  Vec vhat_max;
  std::uint64_t k = 0;

  static OptimizerState init(Vec theta0);
};

// Everything observable about one step, copied out for metrics.
struct StepRecord {
  std::uint64_t k;
  StepHyperparams hp;
  Vec theta_before;
  Vec grad;        // batch gradient fed to this step
  Vec m;           // first moment after the update, pre bias-correction
  Vec v;           // raw second moment after the update, pre bias-correction
  Vec vhat;        // bias-corrected second moment used in the update
                   // (running max applied when max_correction is on)
  Vec theta_after;
};

// One bias-corrected Adam update:
//   m   <- beta1_k m + (1 - beta1_k) g
//   v   <- beta2_k v + (1 - beta2_k) g o g
//   mhat = m / tilde_beta1_k,   vhat = v / tilde_beta2_k
//   vhat <- max(vhat_max, vhat)          (only when max_correction)
//   theta <- theta - alpha_k mhat / (sqrt(vhat) + epsilon)
//   k <- k + 1
//
// Elementwise, no rearrangement, so a straight-line reference can match the
// arithmetic bit for bit up to precision. The state is only mutated after
// the whole step is computed, so a throwing call leaves it unchanged.
//
// Throws std::invalid_argument on dimension mismatch, std::runtime_error on
// a non-finite gradient component, and std::domain_error (naming the
// coordinate and step) when epsilon = 0 meets a zero vhat coordinate.
StepRecord adam_step(OptimizerState& s, const Vec& grad,
                     const StepHyperparams& hp, const StepConfig& cfg);

}  // namespace adamcheck
