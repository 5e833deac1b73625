#pragma once

#include <cstdint>
#include <string>

namespace adamcheck {

// Hyperparameter schedule families for Adam. The step index k starts at 0.
//
// Decaying-beta2 families use beta2_k = (1 - k^-b2)^(1/(k+1)) with
// beta2_0 = 0; diminishing-alpha families use alpha_k = k^-a. Start-value
// conventions differ between families and are kept exactly as published:
// DimAll and DimAlphaConstBeta use alpha_0 = 1, while DimAlphaDecayBeta2
// uses alpha_0 = 0, so its k = 0 step is a deliberate no-op. The asymmetry
// looks like a typo in the source material but is preserved verbatim.
enum class ScheduleFamily {
  ConstAll,              // alpha, beta1, beta2 all constant
  DimAll,                // alpha_k = k^-a, beta1_k = 1 - k^-b1, decaying beta2
  ConstAlphaDecayBeta2,  // constant alpha and beta1, decaying beta2
  DimAlphaConstBeta,     // alpha_k = k^-a, constant beta1 and beta2
  DimAlphaDecayBeta2,    // alpha_k = k^-a, constant beta1, decaying beta2
};

std::string to_string(ScheduleFamily f);

// Accepts the snake_case names produced by to_string. Throws
// std::invalid_argument for anything else.
ScheduleFamily parse_family(const std::string& name);

bool has_decaying_beta2(ScheduleFamily f);
bool has_decaying_alpha(ScheduleFamily f);

// Parameters for one schedule. Each family reads a subset:
//   ConstAll:              alpha > 0, beta1 in (0,1), beta2 in [0,1)
//   DimAll:                a, b1, b2 > 0 with a - b1 + b2/2 > 0
//   ConstAlphaDecayBeta2:  alpha > 0, beta1 in (0,1), b2 in (0,2)
//   DimAlphaConstBeta:     a in (0,1), beta1 in (0,1), beta2 in [0,1)
//   DimAlphaDecayBeta2:    a in (0,1), beta1 in (0,1), b2 in (0,2),
//                          1 - a - b2/2 > 0
struct ScheduleSpec {
  ScheduleFamily family = ScheduleFamily::ConstAll;
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double a = 0.5;
  double b1 = 1.0;
  double b2 = 1.0;

  // Throws std::invalid_argument naming the violated inequality.
  void validate() const;
};

// Everything one optimizer step needs. The bias-correction factors satisfy
// tilde_beta1_k = 1 - beta1_k^(k+1) and tilde_beta2_k = 1 - beta2_k^(k+1);
// both lie in (0, 1]. alpha_k is nonnegative (zero only for
// DimAlphaDecayBeta2 at k = 0).
struct StepHyperparams {
  double alpha_k;
  double beta1_k;
  double beta2_k;
  double tilde_beta1_k;
  double tilde_beta2_k;
};

// Hyperparameters for step k.
//
// tilde_beta2_k for decaying-beta2 families is computed through the exact
// identity 1 - beta2_k^(k+1) = k^-b2 rather than by exponentiation: raising
// the rounded beta2_k to the (k+1)-th power amplifies its half-ulp by a
// factor of about (k+1)/k^-b2 and destroys the value for large k. Constant
// factors are raised by repeated squaring in long double, which keeps the
// result within one double ulp of exact.
StepHyperparams schedule_at(const ScheduleSpec& spec, std::uint64_t k);

// Closed-form value of 1 - beta2_k^(k+1) at step k: k^-b2 for the
// decaying-beta2 families (1 at k = 0), 1 - beta2^(k+1) otherwise.
double tilde_beta2_identity(const ScheduleSpec& spec, std::uint64_t k);

// base^e by repeated squaring in long double, rounded once at the end.
double pow_int_ext(double base, std::uint64_t e);

// 1 - base^e with the power and the subtraction both carried in long
// double, rounded once. Use this instead of 1 - pow_int_ext(...) whenever
// base is close to 1: rounding the power first costs up to
// ulp(base^e)/(1 - base^e) in relative accuracy.
double one_minus_pow_int_ext(double base, std::uint64_t e);

}  // namespace adamcheck
