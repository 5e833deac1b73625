#include "adamcheck/schedules.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adamcheck {

namespace {

[[noreturn]] void fail(const std::string& family, const std::string& what) {
  throw std::invalid_argument(family + " schedule requires " + what);
}

void require(bool ok, const char* family, const char* inequality,
             const char* name, double got) {
  if (ok) return;
  std::ostringstream os;
  os << family << " schedule requires " << inequality << "; got " << name
     << " = " << got;
  throw std::invalid_argument(os.str());
}

double decaying_beta2(std::uint64_t k, double b2) {
  if (k == 0) return 0.0;
  double base = 1.0 - std::pow((double)k, -b2);
  return std::pow(base, 1.0 / (double)(k + 1));
}

}  // namespace

std::string to_string(ScheduleFamily f) {
  switch (f) {
    case ScheduleFamily::ConstAll: return "const_all";
    case ScheduleFamily::DimAll: return "dim_all";
    case ScheduleFamily::ConstAlphaDecayBeta2: return "const_alpha_decay_beta2";
    case ScheduleFamily::DimAlphaConstBeta: return "dim_alpha_const_beta";
    case ScheduleFamily::DimAlphaDecayBeta2: return "dim_alpha_decay_beta2";
  }
  throw std::invalid_argument("unknown schedule family");
}

ScheduleFamily parse_family(const std::string& name) {
  if (name == "const_all") return ScheduleFamily::ConstAll;
  if (name == "dim_all") return ScheduleFamily::DimAll;
  if (name == "const_alpha_decay_beta2")
    return ScheduleFamily::ConstAlphaDecayBeta2;
  if (name == "dim_alpha_const_beta") return ScheduleFamily::DimAlphaConstBeta;
  if (name == "dim_alpha_decay_beta2")
    return ScheduleFamily::DimAlphaDecayBeta2;
  throw std::invalid_argument("unknown schedule family: " + name);
}

bool has_decaying_beta2(ScheduleFamily f) {
  return f == ScheduleFamily::DimAll ||
         f == ScheduleFamily::ConstAlphaDecayBeta2 ||
         f == ScheduleFamily::DimAlphaDecayBeta2;
}

bool has_decaying_alpha(ScheduleFamily f) {
  return f == ScheduleFamily::DimAll ||
         f == ScheduleFamily::DimAlphaConstBeta ||
         f == ScheduleFamily::DimAlphaDecayBeta2;
}

void ScheduleSpec::validate() const {
  switch (family) {
    case ScheduleFamily::ConstAll:
      require(alpha > 0, "const_all", "alpha > 0", "alpha", alpha);
      require(beta1 > 0 && beta1 < 1, "const_all", "beta1 in (0,1)", "beta1",
              beta1);
      require(beta2 >= 0 && beta2 < 1, "const_all", "beta2 in [0,1)", "beta2",
              beta2);
      return;
    case ScheduleFamily::DimAll:
      require(a > 0, "dim_all", "a > 0", "a", a);
      require(b1 > 0, "dim_all", "b1 > 0", "b1", b1);
      require(b2 > 0, "dim_all", "b2 > 0", "b2", b2);
      if (!(a - b1 + b2 / 2 > 0)) {
        std::ostringstream os;
        os << "dim_all schedule requires a - b1 + b2/2 > 0; got "
           << a - b1 + b2 / 2;
        throw std::invalid_argument(os.str());
      }
      return;
    case ScheduleFamily::ConstAlphaDecayBeta2:
      require(alpha > 0, "const_alpha_decay_beta2", "alpha > 0", "alpha",
              alpha);
      require(beta1 > 0 && beta1 < 1, "const_alpha_decay_beta2",
              "beta1 in (0,1)", "beta1", beta1);
      require(b2 > 0 && b2 < 2, "const_alpha_decay_beta2", "b2 in (0,2)", "b2",
              b2);
      return;
    case ScheduleFamily::DimAlphaConstBeta:
      require(a > 0 && a < 1, "dim_alpha_const_beta", "a in (0,1)", "a", a);
      require(beta1 > 0 && beta1 < 1, "dim_alpha_const_beta", "beta1 in (0,1)",
              "beta1", beta1);
      require(beta2 >= 0 && beta2 < 1, "dim_alpha_const_beta",
              "beta2 in [0,1)", "beta2", beta2);
      return;
    case ScheduleFamily::DimAlphaDecayBeta2:
      require(a > 0 && a < 1, "dim_alpha_decay_beta2", "a in (0,1)", "a", a);
      require(beta1 > 0 && beta1 < 1, "dim_alpha_decay_beta2",
              "beta1 in (0,1)", "beta1", beta1);
      require(b2 > 0 && b2 < 2, "dim_alpha_decay_beta2", "b2 in (0,2)", "b2",
              b2);
      if (!(1 - a - b2 / 2 > 0)) {
        std::ostringstream os;
        os << "dim_alpha_decay_beta2 schedule requires 1 - a - b2/2 > 0; got "
           << 1 - a - b2 / 2;
        throw std::invalid_argument(os.str());
      }
      return;
  }
  fail("unknown", "a known family");
}

namespace {

long double pow_int_ld(double base, std::uint64_t e) {
  long double r = 1.0L, b = base;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

double pow_int_ext(double base, std::uint64_t e) {
  return static_cast<double>(pow_int_ld(base, e));
}

double one_minus_pow_int_ext(double base, std::uint64_t e) {
  // Subtract before rounding: 1 - fl(base^e) loses up to ulp(base^e)/(1 - p)
  // relative accuracy when the power sits close to 1.
  return static_cast<double>(1.0L - pow_int_ld(base, e));
}

double tilde_beta2_identity(const ScheduleSpec& spec, std::uint64_t k) {
  if (has_decaying_beta2(spec.family))
    return (k == 0) ? 1.0 : std::pow((double)k, -spec.b2);
  return one_minus_pow_int_ext(spec.beta2, k + 1);
}

StepHyperparams schedule_at(const ScheduleSpec& spec, std::uint64_t k) {
  StepHyperparams hp{};
  const double kd = (double)k;
  switch (spec.family) {
    case ScheduleFamily::ConstAll:
      hp.alpha_k = spec.alpha;
      hp.beta1_k = spec.beta1;
      hp.beta2_k = spec.beta2;
      break;
    case ScheduleFamily::DimAll:
      if (k == 0) {
        hp.alpha_k = 1.0;
        hp.beta1_k = 0.0;
        hp.beta2_k = 0.0;
      } else {
        hp.alpha_k = std::pow(kd, -spec.a);
        hp.beta1_k = 1.0 - std::pow(kd, -spec.b1);
        hp.beta2_k = decaying_beta2(k, spec.b2);
      }
      break;
    case ScheduleFamily::ConstAlphaDecayBeta2:
      hp.alpha_k = spec.alpha;
      hp.beta1_k = spec.beta1;
      hp.beta2_k = decaying_beta2(k, spec.b2);
      break;
    case ScheduleFamily::DimAlphaConstBeta:
      hp.alpha_k = (k == 0) ? 1.0 : std::pow(kd, -spec.a);
      hp.beta1_k = spec.beta1;
      hp.beta2_k = spec.beta2;
      break;
    case ScheduleFamily::DimAlphaDecayBeta2:
      // alpha_0 = 0 is the published start value for this family; the first
      // step is a no-op on theta while m and v warm up.
      hp.alpha_k = (k == 0) ? 0.0 : std::pow(kd, -spec.a);
      hp.beta1_k = spec.beta1;
      hp.beta2_k = decaying_beta2(k, spec.b2);
      break;
  }
  hp.tilde_beta1_k = one_minus_pow_int_ext(hp.beta1_k, k + 1);
  hp.tilde_beta2_k = has_decaying_beta2(spec.family)
                         ? tilde_beta2_identity(spec, k)
                         : one_minus_pow_int_ext(hp.beta2_k, k + 1);
  return hp;
}

}  // namespace adamcheck
