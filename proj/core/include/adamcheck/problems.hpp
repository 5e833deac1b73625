#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adamcheck/rng.hpp"
#include "adamcheck/vec.hpp"

namespace adamcheck {

// A continuously differentiable objective with a stochastic batch-gradient
// oracle. Oracle samples are unbiased estimates of the full gradient with
// single-sample variance E||sample - grad||^2 <= sigma2(), with equality for
// every builtin; a batch of size b averages b independent samples, so the
// batch variance is sigma2()/b.
//
// Every implementation checks ||full_gradient(stationary_point())|| <= 1e-8
// at construction and throws std::runtime_error otherwise.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual const std::string& name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual double value(const Vec& theta) const = 0;
  virtual Vec full_gradient(const Vec& theta) const = 0;
  virtual const Vec& stationary_point() const = 0;
  virtual double sigma2() const = 0;
  // Whether the gradient is globally Lipschitz. Informational; nothing in
  // the update or the bounds depends on it.
  virtual bool lipschitz_smooth_gradient() const = 0;
  // A deterministic, problem-appropriate starting iterate.
  virtual Vec default_theta0() const = 0;
  // Mean of `batch` independent oracle samples at theta.
  virtual Vec sample_batch_gradient(const Vec& theta, std::uint64_t batch,
                                    Rng& rng) const = 0;
};

// f(theta) = 1/2 ||theta||^2, stationary point 0, additive-noise oracle.
std::unique_ptr<Problem> make_quadratic(std::size_t dim, double sigma2);

// f(theta) = sum_i theta_i^4: gradient 4 theta^3 is not globally Lipschitz.
std::unique_ptr<Problem> make_quartic(std::size_t dim, double sigma2);

// f(theta) = sum_i |theta_i|^(3/2): C^1 everywhere, gradient not Lipschitz
// at 0.
std::unique_ptr<Problem> make_power_three_halves(std::size_t dim,
                                                 double sigma2);

// Classic 2-d Rosenbrock, stationary point (1, 1).
std::unique_ptr<Problem> make_rosenbrock(double sigma2);

// Finite sum of n quadratic components l_i = 1/2 sum_j w_j (theta_j-c_ij)^2
// sharing positive weights w with distinct centers c_i. The oracle draws
// component indices uniformly with replacement. The single-sample deviation
// w o (cbar - c_i) does not depend on theta, so sigma2() is exact. The
// stationary point is found at construction by gradient descent with
// backtracking line search down to ||grad|| <= 1e-10.
class FiniteSumProblem : public Problem {
 public:
  virtual std::size_t n_components() const = 0;
  virtual Vec component_gradient(std::size_t i, const Vec& theta) const = 0;
  virtual double component_value(std::size_t i, const Vec& theta) const = 0;
};

std::unique_ptr<FiniteSumProblem> make_finite_sum(std::size_t dim,
                                                  std::size_t n_components);

std::vector<std::string> builtin_problem_names();

// name in {"quadratic", "quartic", "power32", "rosenbrock", "finite_sum"}.
// dim = 0 picks the problem's default dimension. sigma2 applies to the
// additive-noise problems and is ignored by finite_sum; n_components only
// applies to finite_sum.
std::unique_ptr<Problem> make_problem(const std::string& name, std::size_t dim,
                                      double sigma2,
                                      std::size_t n_components = 16);

}  // namespace adamcheck
