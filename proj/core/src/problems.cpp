#include "adamcheck/problems.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace adamcheck {

namespace {

void check_stationary(const Problem& p) {
  double g = norm(p.full_gradient(p.stationary_point()));
  if (!(g <= 1e-8)) {
    std::ostringstream os;
    os << p.name() << ": stationary point check failed, ||grad|| = " << g;
    throw std::runtime_error(os.str());
  }
}

// Deterministic objective plus mean-zero uniform box noise scaled so a
// single sample has E||noise||^2 = sigma2 exactly (per-coordinate variance
// half_width^2/3 = sigma2/dim).
class AdditiveNoiseProblem : public Problem {
 public:
  AdditiveNoiseProblem(std::string name, std::size_t dim, double sigma2)
      : name_(std::move(name)), dim_(dim), sigma2_(sigma2) {
    if (dim == 0)
      throw std::invalid_argument(name_ + ": dim must be positive");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
      throw std::invalid_argument(name_ + ": sigma2 must be finite and >= 0");
    half_width_ = std::sqrt(3.0 * sigma2 / (double)dim);
  }

  const std::string& name() const override { return name_; }
  std::size_t dim() const override { return dim_; }
  double sigma2() const override { return sigma2_; }

  Vec sample_batch_gradient(const Vec& theta, std::uint64_t batch,
                            Rng& rng) const override {
    if (batch == 0)
      throw std::invalid_argument(name_ + ": batch must be positive");
    Vec g = full_gradient(theta);
    if (sigma2_ == 0.0) return g;
    Vec noise(dim_, 0.0);
    for (std::uint64_t s = 0; s < batch; ++s)
      for (std::size_t i = 0; i < dim_; ++i)
        noise[i] += rng.uniform_sym(half_width_);
    for (std::size_t i = 0; i < dim_; ++i) g[i] += noise[i] / (double)batch;
    return g;
  }

 protected:
  std::string name_;
  std::size_t dim_;
  double sigma2_;
  double half_width_;
};

class Quadratic final : public AdditiveNoiseProblem {
 public:
  Quadratic(std::size_t dim, double sigma2)
      : AdditiveNoiseProblem("quadratic", dim, sigma2), star_(dim, 0.0) {}

  double value(const Vec& theta) const override { return 0.5 * norm_sq(theta); }
  Vec full_gradient(const Vec& theta) const override { return theta; }
  const Vec& stationary_point() const override { return star_; }
  bool lipschitz_smooth_gradient() const override { return true; }
  Vec default_theta0() const override { return Vec(dim_, 2.0); }

 private:
  Vec star_;
};

class Quartic final : public AdditiveNoiseProblem {
 public:
  Quartic(std::size_t dim, double sigma2)
      : AdditiveNoiseProblem("quartic", dim, sigma2), star_(dim, 0.0) {}

  double value(const Vec& theta) const override {
    double s = 0.0;
    for (double x : theta) s += x * x * x * x;
    return s;
  }
  Vec full_gradient(const Vec& theta) const override {
    Vec g(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
      g[i] = 4.0 * theta[i] * theta[i] * theta[i];
    return g;
  }
  const Vec& stationary_point() const override { return star_; }
  bool lipschitz_smooth_gradient() const override { return false; }
  Vec default_theta0() const override { return Vec(dim_, 1.5); }

 private:
  Vec star_;
};

class PowerThreeHalves final : public AdditiveNoiseProblem {
 public:
  PowerThreeHalves(std::size_t dim, double sigma2)
      : AdditiveNoiseProblem("power32", dim, sigma2), star_(dim, 0.0) {}

  double value(const Vec& theta) const override {
    double s = 0.0;
    for (double x : theta) s += std::pow(std::fabs(x), 1.5);
    return s;
  }
  Vec full_gradient(const Vec& theta) const override {
    Vec g(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
      double x = theta[i];
      double mag = 1.5 * std::sqrt(std::fabs(x));
      g[i] = (x > 0.0) ? mag : (x < 0.0) ? -mag : 0.0;
    }
    return g;
  }
  const Vec& stationary_point() const override { return star_; }
  bool lipschitz_smooth_gradient() const override { return false; }
  Vec default_theta0() const override { return Vec(dim_, 1.0); }

 private:
  Vec star_;
};

class Rosenbrock final : public AdditiveNoiseProblem {
 public:
  explicit Rosenbrock(double sigma2)
      : AdditiveNoiseProblem("rosenbrock", 2, sigma2), star_{1.0, 1.0} {}

  double value(const Vec& t) const override {
    double a = 1.0 - t[0];
    double b = t[1] - t[0] * t[0];
    return a * a + 100.0 * b * b;
  }
  Vec full_gradient(const Vec& t) const override {
    double b = t[1] - t[0] * t[0];
    return {-2.0 * (1.0 - t[0]) - 400.0 * t[0] * b, 200.0 * b};
  }
  const Vec& stationary_point() const override { return star_; }
  bool lipschitz_smooth_gradient() const override { return false; }
  Vec default_theta0() const override { return {-1.2, 1.0}; }

 private:
  Vec star_;
};

class FiniteSumImpl final : public FiniteSumProblem {
 public:
  FiniteSumImpl(std::size_t dim, std::size_t n)
      : name_("finite_sum"), dim_(dim), weights_(dim), centers_(n, Vec(dim)) {
    if (dim == 0)
      throw std::invalid_argument("finite_sum: dim must be positive");
    if (n < 2)
      throw std::invalid_argument("finite_sum: need at least 2 components");
    for (std::size_t j = 0; j < dim; ++j)
      weights_[j] =
          (dim == 1) ? 1.0 : 0.5 + 1.5 * (double)j / (double)(dim - 1);
    // Centers drawn from a stream keyed only by (dim, n): the instance is a
    // pure function of its constructor arguments.
    Rng rng(derive_seed(0x5eedf00dULL, dim * 1000003ULL + n));
    for (auto& c : centers_)
      for (double& x : c) x = rng.uniform_sym(1.5);

    Vec cbar(dim, 0.0);
    for (const auto& c : centers_)
      for (std::size_t j = 0; j < dim; ++j) cbar[j] += c[j];
    for (double& x : cbar) x /= (double)n;
    sigma2_ = 0.0;
    for (const auto& c : centers_)
      for (std::size_t j = 0; j < dim; ++j) {
        double dev = weights_[j] * (c[j] - cbar[j]);
        sigma2_ += dev * dev;
      }
    sigma2_ /= (double)n;

    star_ = minimize();
  }

  const std::string& name() const override { return name_; }
  std::size_t dim() const override { return dim_; }
  double sigma2() const override { return sigma2_; }
  bool lipschitz_smooth_gradient() const override { return true; }
  std::size_t n_components() const override { return centers_.size(); }

  double component_value(std::size_t i, const Vec& theta) const override {
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      double d = theta[j] - centers_[i][j];
      s += weights_[j] * d * d;
    }
    return 0.5 * s;
  }

  Vec component_gradient(std::size_t i, const Vec& theta) const override {
    Vec g(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      g[j] = weights_[j] * (theta[j] - centers_[i][j]);
    return g;
  }

  double value(const Vec& theta) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < centers_.size(); ++i)
      s += component_value(i, theta);
    return s / (double)centers_.size();
  }

  Vec full_gradient(const Vec& theta) const override {
    Vec g(dim_, 0.0);
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      Vec ci = component_gradient(i, theta);
      for (std::size_t j = 0; j < dim_; ++j) g[j] += ci[j];
    }
    for (double& x : g) x /= (double)centers_.size();
    return g;
  }

  const Vec& stationary_point() const override { return star_; }

  Vec default_theta0() const override {
    Vec t = star_;
    for (std::size_t j = 0; j < dim_; ++j)
      t[j] += (j % 2 == 0) ? 0.5 : -0.5;
    return t;
  }

  Vec sample_batch_gradient(const Vec& theta, std::uint64_t batch,
                            Rng& rng) const override {
    if (batch == 0)
      throw std::invalid_argument("finite_sum: batch must be positive");
    Vec g(dim_, 0.0);
    for (std::uint64_t s = 0; s < batch; ++s) {
      std::size_t i = (std::size_t)rng.uniform_index(centers_.size());
      for (std::size_t j = 0; j < dim_; ++j)
        g[j] += weights_[j] * (theta[j] - centers_[i][j]);
    }
    for (double& x : g) x /= (double)batch;
    return g;
  }

 private:
  // Gradient descent with backtracking line search down to
  // ||grad|| <= 1e-10. Backtracking accepts on gradient-norm decrease, not
  // on function decrease: near the floor the objective differences are
  // t*||g||^2 ~ 1e-20 against a value of order 1 and vanish in rounding,
  // while the gradient itself stays accurate to ~1e-14.
  Vec minimize() const {
    Vec theta(dim_, 0.0);
    double gn = norm(full_gradient(theta));
    for (int iter = 0; iter < 10000; ++iter) {
      if (gn <= 1e-10) return theta;
      Vec g = full_gradient(theta);
      double t = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 60 && !moved; ++bt) {
        Vec cand = theta;
        for (std::size_t j = 0; j < dim_; ++j) cand[j] -= t * g[j];
        double cn = norm(full_gradient(cand));
        if (cn < gn) {
          theta = cand;
          gn = cn;
          moved = true;
        }
        t *= 0.5;
      }
      if (!moved) break;
    }
    if (gn <= 1e-10) return theta;
    throw std::runtime_error("finite_sum: minimizer did not converge");
  }

  std::string name_;
  std::size_t dim_;
  Vec weights_;
  std::vector<Vec> centers_;
  double sigma2_ = 0.0;
  Vec star_;
};

std::size_t pick_dim(std::size_t requested, std::size_t fallback) {
  return requested == 0 ? fallback : requested;
}

}  // namespace

std::unique_ptr<Problem> make_quadratic(std::size_t dim, double sigma2) {
  auto p = std::make_unique<Quadratic>(dim, sigma2);
  check_stationary(*p);
  return p;
}

std::unique_ptr<Problem> make_quartic(std::size_t dim, double sigma2) {
  auto p = std::make_unique<Quartic>(dim, sigma2);
  check_stationary(*p);
  return p;
}

std::unique_ptr<Problem> make_power_three_halves(std::size_t dim,
                                                 double sigma2) {
  auto p = std::make_unique<PowerThreeHalves>(dim, sigma2);
  check_stationary(*p);
  return p;
}

std::unique_ptr<Problem> make_rosenbrock(double sigma2) {
  auto p = std::make_unique<Rosenbrock>(sigma2);
  check_stationary(*p);
  return p;
}

std::unique_ptr<FiniteSumProblem> make_finite_sum(std::size_t dim,
                                                  std::size_t n_components) {
  auto p = std::make_unique<FiniteSumImpl>(dim, n_components);
  check_stationary(*p);
  return p;
}

std::vector<std::string> builtin_problem_names() {
  return {"quadratic", "quartic", "power32", "rosenbrock", "finite_sum"};
}

std::unique_ptr<Problem> make_problem(const std::string& name, std::size_t dim,
                                      double sigma2,
                                      std::size_t n_components) {
  if (name == "quadratic") return make_quadratic(pick_dim(dim, 2), sigma2);
  if (name == "quartic") return make_quartic(pick_dim(dim, 2), sigma2);
  if (name == "power32")
    return make_power_three_halves(pick_dim(dim, 2), sigma2);
  if (name == "rosenbrock") {
    if (dim != 0 && dim != 2)
      throw std::invalid_argument("rosenbrock: dim must be 2");
    return make_rosenbrock(sigma2);
  }
  if (name == "finite_sum")
    return make_finite_sum(pick_dim(dim, 4), n_components);
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace adamcheck
