#include "adamcheck/schedules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace adamcheck;

namespace {

ScheduleSpec const_all(double alpha, double b1, double b2v) {
  ScheduleSpec s;
  s.family = ScheduleFamily::ConstAll;
  s.alpha = alpha;
  s.beta1 = b1;
  s.beta2 = b2v;
  return s;
}

ScheduleSpec dim_all(double a, double b1, double b2) {
  ScheduleSpec s;
  s.family = ScheduleFamily::DimAll;
  s.a = a;
  s.b1 = b1;
  s.b2 = b2;
  return s;
}

ScheduleSpec const_alpha_decay(double alpha, double beta1, double b2) {
  ScheduleSpec s;
  s.family = ScheduleFamily::ConstAlphaDecayBeta2;
  s.alpha = alpha;
  s.beta1 = beta1;
  s.b2 = b2;
  return s;
}

bool rel_close(double x, double ref, double tol) {
  return std::fabs(x - ref) <= tol * std::fabs(ref);
}

}  // namespace

TEST_SUITE("schedules") {

TEST_CASE("constant family returns its constants at every step") {
  ScheduleSpec s = const_all(1e-3, 0.9, 0.999);
  s.validate();
  for (std::uint64_t k : {0ull, 7ull, 1000ull}) {
    StepHyperparams hp = schedule_at(s, k);
    CHECK(hp.alpha_k == 1e-3);
    CHECK(hp.beta1_k == 0.9);
    CHECK(hp.beta2_k == 0.999);
    long double t1 = 1.0L - oracle::pow_int_ld(0.9, k + 1);
    long double t2 = 1.0L - oracle::pow_int_ld(0.999, k + 1);
    CHECK(rel_close(hp.tilde_beta1_k, (double)t1, 1e-15));
    CHECK(rel_close(hp.tilde_beta2_k, (double)t2, 1e-15));
  }
}

TEST_CASE("diminishing family start values are (1, 0, 0)") {
  ScheduleSpec s = dim_all(0.5, 1.0, 1.5);
  s.validate();
  StepHyperparams hp = schedule_at(s, 0);
  CHECK(hp.alpha_k == 1.0);
  CHECK(hp.beta1_k == 0.0);
  CHECK(hp.beta2_k == 0.0);
  CHECK(hp.tilde_beta1_k == 1.0);
  CHECK(hp.tilde_beta2_k == 1.0);
}

TEST_CASE("decaying beta2 value at k = 4, b2 = 1 matches (3/4)^(1/5)") {
  ScheduleSpec s = const_alpha_decay(1e-3, 0.9, 1.0);
  s.validate();
  StepHyperparams hp = schedule_at(s, 4);
  CHECK(rel_close(hp.beta2_k, oracle::frozen::beta2_k4_b2_1, 1e-15));
  // 1 - beta2_4^5 = 4^-1 = 0.25, and 0.25 is exact in binary.
  CHECK(hp.tilde_beta2_k == 0.25);
  long double direct = 1.0L - oracle::pow_int_ld(hp.beta2_k, 5);
  CHECK(rel_close((double)direct, 0.25, 1e-14));
}

TEST_CASE("tilde_beta2_identity closed forms") {
  ScheduleSpec s = const_alpha_decay(1e-3, 0.9, 1.0);
  CHECK(tilde_beta2_identity(s, 0) == 1.0);
  CHECK(tilde_beta2_identity(s, 1) == 1.0);  // 1^-b2
  CHECK(rel_close(tilde_beta2_identity(s, 100), 0.01, 1e-15));
  s.b2 = 0.5;
  CHECK(tilde_beta2_identity(s, 16) == 0.25);  // 16^-.5
  CHECK(schedule_at(s, 16).tilde_beta2_k == tilde_beta2_identity(s, 16));
}

TEST_CASE("bias-correction identity holds to 1e-12 relative over log-spaced k") {
  for (double b2 : {0.5, 1.0, 1.5}) {
    ScheduleSpec s = const_alpha_decay(1e-3, 0.9, b2);
    s.validate();
    std::uint64_t k = 1;
    while (k <= 1000000ull) {
      StepHyperparams hp = schedule_at(s, k);
      long double target =
          oracle::pow_real_ld((long double)k, -(long double)b2);
      CHECK(std::fabs(hp.tilde_beta2_k - (double)target) <=
            1e-12 * (double)target);
      CHECK(rel_close(tilde_beta2_identity(s, k), (double)target, 1e-12));
      k = (k < 4) ? k + 1 : (std::uint64_t)(k * 2.7) + 1;
    }
  }
}

TEST_CASE("identity algebra cross-checked by long double exponentiation") {
  // At small k the half-ulp of the rounded beta2_k is amplified by only
  // (k+1)/k^-b2, so direct exponentiation is trustworthy there.
  for (double b2 : {0.5, 1.0, 1.5}) {
    ScheduleSpec s = const_alpha_decay(1e-3, 0.9, b2);
    for (std::uint64_t k = 1; k <= 32; ++k) {
      long double kb = oracle::pow_real_ld((long double)k, -(long double)b2);
      long double beta2 =
          std::exp(std::log(1.0L - kb) / (long double)(k + 1));
      if (k == 1) beta2 = 0.0L;  // 1 - 1^-b2 = 0
      long double direct = 1.0L - oracle::pow_int_ld(beta2, k + 1);
      CHECK(std::fabs((double)(direct - kb)) <= 1e-13 * (double)kb);
      CHECK(rel_close(schedule_at(s, k).tilde_beta2_k, (double)kb, 1e-13));
    }
  }
}

TEST_CASE("diminishing schedules move in the right direction") {
  ScheduleSpec s = dim_all(0.5, 1.0, 1.5);  // 0.5 - 1 + 0.75 = 0.25 > 0
  s.validate();
  double prev_alpha = schedule_at(s, 1).alpha_k;
  double prev_beta1 = schedule_at(s, 1).beta1_k;
  CHECK(prev_alpha == 1.0);  // 1^-a
  CHECK(prev_beta1 == 0.0);  // 1 - 1^-b1
  for (std::uint64_t k = 2; k <= 100; ++k) {
    StepHyperparams hp = schedule_at(s, k);
    CHECK(hp.alpha_k < prev_alpha);
    CHECK(hp.beta1_k > prev_beta1);
    CHECK(hp.beta1_k < 1.0);
    CHECK(hp.beta2_k >= 0.0);
    CHECK(hp.beta2_k < 1.0);
    CHECK(hp.tilde_beta1_k > 0.0);
    CHECK(hp.tilde_beta1_k <= 1.0);
    CHECK(hp.tilde_beta2_k > 0.0);
    CHECK(hp.tilde_beta2_k <= 1.0);
    prev_alpha = hp.alpha_k;
    prev_beta1 = hp.beta1_k;
  }
}

TEST_CASE("tilde_beta1 matches extended-precision repeated squaring") {
  ScheduleSpec s = dim_all(0.5, 1.0, 1.5);
  for (std::uint64_t k : {1ull, 5ull, 100ull, 99999ull, 1000000ull}) {
    StepHyperparams hp = schedule_at(s, k);
    long double ref = 1.0L - oracle::pow_int_ld(hp.beta1_k, k + 1);
    CHECK(rel_close(hp.tilde_beta1_k, (double)ref, 1e-15));
  }
  // Constant beta1 close to 1 over a long horizon.
  ScheduleSpec c = const_all(1e-3, 0.999, 0.5);
  for (std::uint64_t k : {10ull, 1000ull, 250000ull}) {
    StepHyperparams hp = schedule_at(c, k);
    long double ref = 1.0L - oracle::pow_int_ld(0.999, k + 1);
    CHECK(rel_close(hp.tilde_beta1_k, (double)ref, 1e-15));
  }
}

TEST_CASE("alpha start conventions differ between diminishing families") {
  ScheduleSpec d19;
  d19.family = ScheduleFamily::DimAlphaConstBeta;
  d19.a = 0.5;
  d19.validate();
  CHECK(schedule_at(d19, 0).alpha_k == 1.0);
  CHECK(schedule_at(d19, 4).alpha_k == 0.5);
  CHECK(schedule_at(d19, 0).beta1_k == d19.beta1);

  ScheduleSpec d21;
  d21.family = ScheduleFamily::DimAlphaDecayBeta2;
  d21.a = 0.25;
  d21.b2 = 0.5;  // 1 - 0.25 - 0.25 = 0.5 > 0
  d21.validate();
  CHECK(schedule_at(d21, 0).alpha_k == 0.0);  // published start value
  CHECK(schedule_at(d21, 1).alpha_k == 1.0);
  CHECK(schedule_at(d21, 16).alpha_k == 0.5);
  CHECK(schedule_at(d21, 0).beta2_k == 0.0);
}

TEST_CASE("validation names the violated inequality") {
  ScheduleSpec s = dim_all(0.5, 1.0, 0.5);  // 0.5 - 1 + 0.25 = -0.25
  CHECK_THROWS_WITH_AS(s.validate(),
                       doctest::Contains("a - b1 + b2/2"),
                       std::invalid_argument);

  ScheduleSpec c = const_all(1e-3, 0.9, 1.0);
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("beta2"),
                       std::invalid_argument);
  c = const_all(0.0, 0.9, 0.999);
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("alpha"),
                       std::invalid_argument);
  c = const_all(1e-3, 1.0, 0.999);
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("beta1"),
                       std::invalid_argument);

  ScheduleSpec e = const_alpha_decay(1e-3, 0.9, 2.0);
  CHECK_THROWS_WITH_AS(e.validate(), doctest::Contains("b2"),
                       std::invalid_argument);

  ScheduleSpec f;
  f.family = ScheduleFamily::DimAlphaConstBeta;
  f.a = 1.0;
  CHECK_THROWS_WITH_AS(f.validate(), doctest::Contains("a"),
                       std::invalid_argument);

  ScheduleSpec g;
  g.family = ScheduleFamily::DimAlphaDecayBeta2;
  g.a = 0.5;
  g.b2 = 1.5;  // 1 - 0.5 - 0.75 < 0
  CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("1 - a - b2/2"),
                       std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (ScheduleFamily f :
       {ScheduleFamily::ConstAll, ScheduleFamily::DimAll,
        ScheduleFamily::ConstAlphaDecayBeta2, ScheduleFamily::DimAlphaConstBeta,
        ScheduleFamily::DimAlphaDecayBeta2}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS((void)parse_family("nope"), std::invalid_argument);
}

}  // TEST_SUITE
