#include "adamcheck/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace adamcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sigma^2/b + G^2 appears in every bound, usually under a square root, and
// B + sqrt(sigma^2/b + G^2) multiplies the tail terms.
struct NoiseScale {
  double s2bG;
  double root;
  double q;
};

NoiseScale noise_scale(const TrajectoryStats& st) {
  double s = st.sigma2_over_b + st.G_hat * st.G_hat;
  double r = std::sqrt(s);
  return {s, r, st.B_hat + r};
}

void require_family(const ScheduleSpec& spec, ScheduleFamily want,
                    Theorem t) {
  if (spec.family != want)
    throw std::invalid_argument("bound " + to_string(t) + " applies to the " +
                                to_string(want) + " family, got " +
                                to_string(spec.family));
}

void require_dim(const TrajectoryStats& st, Theorem t) {
  if (st.dim == 0)
    throw std::invalid_argument("bound " + to_string(t) +
                                " needs stats.dim >= 1");
}

// C3, C4, C5 are shared by every bound with a constant beta1.
void push_tail_terms(BoundReport& rep, const TrajectoryStats& st,
                     double beta1, double q) {
  rep.terms.push_back(
      {"C3", (1.0 - beta1) / beta1 * st.D_hat * st.G_hat, true, true});
  rep.terms.push_back({"C4", (1.0 - beta1) * st.D_hat * q, true, false});
  rep.terms.push_back(
      {"C5", (1.0 / beta1 + 2.0 * (1.0 - beta1)) * st.D_hat * q, false,
       true});
}

void finalize(BoundReport& rep) {
  double m = 0.0, g = 0.0;
  for (const auto& t : rep.terms) {
    if (t.in_m_total) m += t.value;
    if (t.in_grad_total) g += t.value;
  }
  rep.total_m = m;
  rep.total_grad = g;
}

BoundReport start_report(Theorem t, std::uint64_t horizon,
                         const TrajectoryStats& st) {
  BoundReport rep;
  rep.theorem = t;
  rep.horizon = horizon;
  rep.vstar_degenerate = st.vstar_degenerate();
  return rep;
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::C1: return "c1";
    case Theorem::Cor1: return "cor1";
    case Theorem::D1: return "d1";
    case Theorem::C2: return "c2";
    case Theorem::C3: return "c3";
    case Theorem::D2: return "d2";
    case Theorem::D3: return "d3";
  }
  throw std::invalid_argument("to_string: bad Theorem value");
}

Theorem parse_theorem(const std::string& name) {
  if (name == "c1") return Theorem::C1;
  if (name == "cor1") return Theorem::Cor1;
  if (name == "d1") return Theorem::D1;
  if (name == "c2") return Theorem::C2;
  if (name == "c3") return Theorem::C3;
  if (name == "d2") return Theorem::D2;
  if (name == "d3") return Theorem::D3;
  throw std::invalid_argument("unknown theorem name: " + name);
}

bool requires_max_correction(Theorem t) {
  switch (t) {
    case Theorem::C1:
    case Theorem::Cor1:
    case Theorem::D1:
      return false;
    default:
      return true;
  }
}

std::vector<Theorem> applicable_theorems(ScheduleFamily family) {
  switch (family) {
    case ScheduleFamily::ConstAll:
      return {Theorem::C1, Theorem::Cor1, Theorem::C2};
    case ScheduleFamily::DimAll:
      return {Theorem::D1};
    case ScheduleFamily::ConstAlphaDecayBeta2:
      return {Theorem::C3};
    case ScheduleFamily::DimAlphaConstBeta:
      return {Theorem::D2};
    case ScheduleFamily::DimAlphaDecayBeta2:
      return {Theorem::D3};
  }
  throw std::invalid_argument("applicable_theorems: bad family value");
}

const BoundTerm& BoundReport::term(const std::string& name) const {
  for (const auto& t : terms)
    if (t.name == name) return t;
  throw std::out_of_range("no bound term named " + name);
}

BoundReport bound_c1(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t k) {
  require_family(spec, ScheduleFamily::ConstAll, Theorem::C1);
  auto rep = start_report(Theorem::C1, k, st);
  auto ns = noise_scale(st);
  double c1 = kInf, c2 = kInf;
  if (!rep.vstar_degenerate) {
    c1 = st.D_hat * std::pow(st.M_hat, 0.25) /
         (std::pow(st.vstar_hat, 0.25) * spec.beta1) * ns.root;
    double g1 = one_minus_pow_int_ext(spec.beta1, k + 1);
    double g2 = one_minus_pow_int_ext(spec.beta2, k + 1);
    c2 = spec.alpha * std::sqrt(g2) /
         (2.0 * std::sqrt(st.vstar_hat) * spec.beta1 * g1) * ns.s2bG;
  }
  rep.terms.push_back({"C1", c1, true, true});
  rep.terms.push_back({"C2", c2, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport bound_cor1(const TrajectoryStats& st, const ScheduleSpec& spec) {
  require_family(spec, ScheduleFamily::ConstAll, Theorem::Cor1);
  auto rep = start_report(Theorem::Cor1, 0, st);
  auto ns = noise_scale(st);
  double c1 = kInf, c2bar = kInf;
  if (!rep.vstar_degenerate) {
    c1 = st.D_hat * std::pow(st.M_hat, 0.25) /
         (std::pow(st.vstar_hat, 0.25) * spec.beta1) * ns.root;
    c2bar =
        spec.alpha * ns.s2bG / (2.0 * std::sqrt(st.vstar_hat) * spec.beta1);
  }
  rep.terms.push_back({"C1", c1, true, true});
  rep.terms.push_back({"C2bar", c2bar, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport bound_d1(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t k) {
  require_family(spec, ScheduleFamily::DimAll, Theorem::D1);
  if (k == 0)
    throw std::invalid_argument("bound d1 needs k >= 1");
  auto rep = start_report(Theorem::D1, k, st);
  auto ns = noise_scale(st);
  double kd = (double)k;
  double kb1 = std::pow(kd, spec.b1);
  rep.undefined = (kb1 == 1.0);
  double d1 = kInf, d2 = kInf, d3 = kInf, d5 = kInf;
  double d4 = st.D_hat * ns.q / kb1;
  if (!rep.undefined) {
    double den = kb1 - 1.0;
    d3 = st.D_hat * st.G_hat / den;
    d5 = st.D_hat * ns.q *
         (std::pow(kd, spec.b1 * spec.b1) + 2.0 * kb1 - 2.0) / (kb1 * den);
    if (!rep.vstar_degenerate) {
      d1 = st.D_hat * std::pow(st.M_hat, 0.25) * kb1 /
           (std::pow(st.vstar_hat, 0.25) * den) * ns.root;
      d2 = ns.s2bG /
           (2.0 * std::sqrt(st.vstar_hat) * den *
            std::pow(kd, spec.a + spec.b2 / 2.0 - 2.0 * spec.b1));
    }
  }
  rep.terms.push_back({"D1", d1, true, true});
  rep.terms.push_back({"D2", d2, true, true});
  rep.terms.push_back({"D3", d3, true, true});
  rep.terms.push_back({"D4", d4, true, true});
  rep.terms.push_back({"D5", d5, false, true});
  finalize(rep);
  return rep;
}

BoundReport bound_c2(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t K) {
  require_family(spec, ScheduleFamily::ConstAll, Theorem::C2);
  if (K == 0)
    throw std::invalid_argument("bound c2 needs K >= 1");
  require_dim(st, Theorem::C2);
  auto rep = start_report(Theorem::C2, K, st);
  auto ns = noise_scale(st);
  double om_b2 = 1.0 - spec.beta2;
  rep.undefined = !(om_b2 > 0.0);
  double c1bar = kInf, c2hat = kInf;
  if (!rep.undefined) {
    double g1 = one_minus_pow_int_ext(spec.beta1, K + 1);
    c1bar = (double)st.dim * st.Dtilde_hat * std::sqrt(st.M_hat) * g1 /
            (2.0 * spec.alpha * spec.beta1 * std::sqrt(om_b2) * (double)K);
  }
  if (!rep.vstar_degenerate)
    c2hat = spec.alpha * ns.s2bG /
            (2.0 * std::sqrt(st.vstar_hat) * spec.beta1 * (1.0 - spec.beta1));
  rep.terms.push_back({"C1bar", c1bar, true, true});
  rep.terms.push_back({"C2hat", c2hat, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport bound_c3(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t K) {
  require_family(spec, ScheduleFamily::ConstAlphaDecayBeta2, Theorem::C3);
  if (K == 0)
    throw std::invalid_argument("bound c3 needs K >= 1");
  require_dim(st, Theorem::C3);
  auto rep = start_report(Theorem::C3, K, st);
  auto ns = noise_scale(st);
  double Kd = (double)K;
  double c1hat = (double)st.dim * st.Dtilde_hat * std::sqrt(st.M_hat) /
                 (2.0 * spec.alpha * spec.beta1 *
                  std::pow(Kd, 1.0 - spec.b2 / 2.0));
  double c2tilde = kInf;
  if (!rep.vstar_degenerate)
    c2tilde = spec.alpha * ns.s2bG /
              (std::sqrt(st.vstar_hat) * spec.beta1 * (1.0 - spec.beta1) *
               std::pow(Kd, spec.b2 / 2.0));
  rep.terms.push_back({"C1hat", c1hat, true, true});
  rep.terms.push_back({"C2tilde", c2tilde, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport bound_d2(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t K) {
  require_family(spec, ScheduleFamily::DimAlphaConstBeta, Theorem::D2);
  if (K == 0)
    throw std::invalid_argument("bound d2 needs K >= 1");
  require_dim(st, Theorem::D2);
  auto rep = start_report(Theorem::D2, K, st);
  auto ns = noise_scale(st);
  double Kd = (double)K;
  double om_b2 = 1.0 - spec.beta2;
  rep.undefined = !(om_b2 > 0.0);
  double d1bar = kInf, d2bar = kInf;
  if (!rep.undefined)
    d1bar = (double)st.dim * st.Dtilde_hat * std::sqrt(st.M_hat) /
            (2.0 * spec.beta1 * std::sqrt(om_b2) *
             std::pow(Kd, 1.0 - spec.a));
  if (!rep.vstar_degenerate)
    d2bar = ns.s2bG / (std::sqrt(st.vstar_hat) * spec.beta1 *
                       (1.0 - spec.beta1) * std::pow(Kd, spec.a));
  rep.terms.push_back({"D1bar", d1bar, true, true});
  rep.terms.push_back({"D2bar", d2bar, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport bound_d3(const TrajectoryStats& st, const ScheduleSpec& spec,
                     std::uint64_t K) {
  require_family(spec, ScheduleFamily::DimAlphaDecayBeta2, Theorem::D3);
  if (K == 0)
    throw std::invalid_argument("bound d3 needs K >= 1");
  require_dim(st, Theorem::D3);
  auto rep = start_report(Theorem::D3, K, st);
  auto ns = noise_scale(st);
  double Kd = (double)K;
  double expo = spec.a + spec.b2 / 2.0;
  double d1hat = (double)st.dim * st.Dtilde_hat * std::sqrt(st.M_hat) /
                 (2.0 * spec.beta1 * std::pow(Kd, 1.0 - expo));
  double d2hat = kInf;
  if (!rep.vstar_degenerate)
    d2hat = ns.s2bG / (std::sqrt(st.vstar_hat) * spec.beta1 *
                       (1.0 - spec.beta1) * std::pow(Kd, expo));
  rep.terms.push_back({"D1hat", d1hat, true, true});
  rep.terms.push_back({"D2hat", d2hat, true, true});
  push_tail_terms(rep, st, spec.beta1, ns.q);
  finalize(rep);
  return rep;
}

BoundReport evaluate_bound(const BoundInputs& in) {
  switch (in.theorem) {
    case Theorem::C1: return bound_c1(in.stats, in.spec, in.horizon);
    case Theorem::Cor1: return bound_cor1(in.stats, in.spec);
    case Theorem::D1: return bound_d1(in.stats, in.spec, in.horizon);
    case Theorem::C2: return bound_c2(in.stats, in.spec, in.horizon);
    case Theorem::C3: return bound_c3(in.stats, in.spec, in.horizon);
    case Theorem::D2: return bound_d2(in.stats, in.spec, in.horizon);
    case Theorem::D3: return bound_d3(in.stats, in.spec, in.horizon);
  }
  throw std::invalid_argument("evaluate_bound: bad Theorem value");
}

}  // namespace adamcheck
