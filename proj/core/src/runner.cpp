#include "adamcheck/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "adamcheck/problems.hpp"
#include "adamcheck/rng.hpp"

namespace adamcheck {

namespace {

using nlohmann::json;

MeanStderr agg_vals(const std::vector<double>& v) {
  if (v.size() == 1) return {v[0], 0.0};
  return monte_carlo_expectation(v);
}

SeedResult run_one_seed(const Problem& p, const RunConfig& cfg,
                        std::uint64_t idx, const Vec& theta_star,
                        const Vec& theta_ref, bool distinct,
                        const Vec& theta0, std::uint64_t stride,
                        const std::vector<std::uint64_t>& checkpoints,
                        double s2b) {
  SeedResult r;
  r.seed_index = idx;
  r.stream_seed = derive_seed(cfg.master_seed, idx);
  r.stats.sigma2_over_b = s2b;
  if (distinct) r.stats_ref.sigma2_over_b = s2b;
  Rng rng(r.stream_seed);
  MeasureAccumulator acc(stride, checkpoints);
  auto state = OptimizerState::init(theta0);
  Vec prev_vhat;
  try {
    for (std::uint64_t k = 0; k <= cfg.steps; ++k) {
      auto hp = schedule_at(cfg.schedule, k);
      Vec g = p.sample_batch_gradient(state.theta, cfg.batch, rng);
      auto rec = adam_step(state, g, hp, cfg.step);
      Vec fg = p.full_gradient(rec.theta_before);
      update_stats(r.stats, rec, fg, theta_star);
      if (distinct) update_stats(r.stats_ref, rec, fg, theta_ref);
      if (cfg.step.max_correction) {
        if (!prev_vhat.empty())
          for (std::size_t i = 0; i < rec.vhat.size(); ++i)
            if (rec.vhat[i] < prev_vhat[i]) r.vhat_monotone = false;
        prev_vhat = rec.vhat;
      }
      if (k >= 1) {
        double mi = m_inner(rec.m, rec.theta_before, theta_star);
        if (mi < 0) ++r.sign_violations;
        acc.push(k, mi, grad_inner(fg, rec.theta_before, theta_ref),
                 norm_sq(fg), hp);
      }
    }
  } catch (const std::exception& e) {
    r.failed = true;
    r.error = e.what();
    r.error_step = state.k;
  }
  r.rows = acc.rows();
  r.checkpoints = acc.checkpoint_rows();
  r.theta_final = state.theta;
  r.final_value = p.value(state.theta);
  return r;
}

}  // namespace

void validate_run_config(const RunConfig& cfg) {
  if (cfg.steps < 1)
    throw std::invalid_argument("run config: steps must be >= 1");
  if (cfg.seed_indices.empty())
    throw std::invalid_argument("run config: need at least one seed");
  if (cfg.batch < 1)
    throw std::invalid_argument("run config: batch must be >= 1");
  if (!(cfg.sigma2 >= 0.0) || !std::isfinite(cfg.sigma2))
    throw std::invalid_argument("run config: sigma2 must be finite and >= 0");
  if (!(cfg.step.epsilon >= 0.0) || !std::isfinite(cfg.step.epsilon))
    throw std::invalid_argument(
        "run config: epsilon must be finite and >= 0");
  cfg.schedule.validate();
}

std::uint64_t resolved_stride(const RunConfig& cfg) {
  if (cfg.stride != 0) return cfg.stride;
  return std::max<std::uint64_t>(1, cfg.steps / 1000);
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t K) {
  std::vector<std::uint64_t> cps;
  for (std::uint64_t c = 1; c <= K; c *= 10) {
    cps.push_back(c);
    if (c > K / 10) break;  // next power would overflow past K anyway
  }
  if (cps.empty() || cps.back() != K) cps.push_back(K);
  return cps;
}

bool RunReport::all_pass() const {
  if (seeds.empty() || failed_seeds > 0) return false;
  if (!vstar_positive) return false;
  if (monotone_vhat_checked && !monotone_vhat_ok) return false;
  for (const auto& dc : dominations)
    if (!dc.informational && (!dc.pass_m || !dc.pass_grad)) return false;
  return true;
}

const AggregatedRow& RunReport::aggregated_at(std::uint64_t k) const {
  for (const auto& a : aggregated)
    if (a.k == k) return a;
  throw std::out_of_range("no aggregated row at k = " + std::to_string(k));
}

RunReport run_experiment(const RunConfig& cfg) {
  validate_run_config(cfg);
  auto p = make_problem(cfg.problem, cfg.dim, cfg.sigma2, cfg.n_components);

  RunReport rep;
  rep.config = cfg;
  rep.stride = resolved_stride(cfg);
  rep.checkpoints = default_checkpoints(cfg.steps);
  rep.theta_star = p->stationary_point();
  rep.theta0 = cfg.theta0 ? *cfg.theta0 : p->default_theta0();
  rep.theta_ref = cfg.theta_ref ? *cfg.theta_ref : rep.theta_star;
  if (rep.theta0.size() != p->dim())
    throw std::invalid_argument(
        "run config: theta0 does not match the problem dimension");
  if (rep.theta_ref.size() != p->dim())
    throw std::invalid_argument(
        "run config: theta_ref does not match the problem dimension");
  rep.distinct_ref = rep.theta_ref != rep.theta_star;
  rep.sigma2 = p->sigma2();
  const double s2b = rep.sigma2 / (double)cfg.batch;

  for (std::uint64_t idx : cfg.seed_indices)
    rep.seeds.push_back(run_one_seed(*p, cfg, idx, rep.theta_star,
                                     rep.theta_ref, rep.distinct_ref,
                                     rep.theta0, rep.stride, rep.checkpoints,
                                     s2b));

  rep.monotone_vhat_checked = cfg.step.max_correction;
  std::vector<TrajectoryStats> ok, ok_ref;
  for (const auto& sr : rep.seeds) {
    if (sr.failed) {
      rep.failed_seeds += 1;
      continue;
    }
    ok.push_back(sr.stats);
    if (rep.distinct_ref) ok_ref.push_back(sr.stats_ref);
    rep.sign_violations += sr.sign_violations;
    if (cfg.step.max_correction && !sr.vhat_monotone)
      rep.monotone_vhat_ok = false;
  }
  if (ok.empty()) return rep;  // every seed failed; errors are attached

  rep.pooled = pool_stats(ok);
  rep.pooled_ref = rep.distinct_ref ? pool_stats(ok_ref) : rep.pooled;
  rep.vstar_positive = !rep.pooled.vstar_degenerate();

  // The logged grids are identical across successful seeds, so rows can be
  // joined by k directly.
  std::map<std::uint64_t, std::vector<const MeasureRow*>> grid;
  for (const auto& sr : rep.seeds) {
    if (sr.failed) continue;
    std::map<std::uint64_t, const MeasureRow*> mine;
    for (const auto& row : sr.rows) mine[row.k] = &row;
    for (const auto& row : sr.checkpoints) mine[row.k] = &row;
    for (const auto& [k, row] : mine) grid[k].push_back(row);
  }
  const std::size_t n_ok = ok.size();
  for (const auto& [k, rows] : grid) {
    if (rows.size() != n_ok) continue;
    AggregatedRow a;
    a.k = k;
    a.n = rows.size();
    std::vector<double> v(n_ok);
    for (std::size_t i = 0; i < n_ok; ++i) v[i] = rows[i]->m_inner;
    a.m_inner = agg_vals(v);
    for (std::size_t i = 0; i < n_ok; ++i) v[i] = rows[i]->grad_inner;
    a.grad_inner = agg_vals(v);
    for (std::size_t i = 0; i < n_ok; ++i) v[i] = rows[i]->mean_m_inner;
    a.mean_m_inner = agg_vals(v);
    for (std::size_t i = 0; i < n_ok; ++i) v[i] = rows[i]->mean_grad_inner;
    a.mean_grad_inner = agg_vals(v);
    rep.aggregated.push_back(a);
  }

  auto emit = [&](Theorem t, std::uint64_t horizon, std::uint64_t measure_k,
                  bool averaged) {
    BoundReport b = evaluate_bound({rep.pooled, cfg.schedule, horizon, t});
    const AggregatedRow& row = rep.aggregated_at(measure_k);
    b.informational =
        requires_max_correction(t) && !cfg.step.max_correction;
    b.measured_m = averaged ? row.mean_m_inner.mean : row.m_inner.mean;
    b.measured_grad =
        averaged ? row.mean_grad_inner.mean : row.grad_inner.mean;
    BoundReport bg = b;
    if (rep.distinct_ref) {
      bg = evaluate_bound({rep.pooled_ref, cfg.schedule, horizon, t});
      bg.informational = b.informational;
      // The momentum measure is defined against the stationary point, so
      // the reference-point evaluation only speaks to the gradient side.
      bg.measured_m = std::numeric_limits<double>::quiet_NaN();
      bg.measured_grad = b.measured_grad;
      rep.bounds_ref.push_back(bg);
    }
    rep.bounds.push_back(b);

    DominationCheck dc;
    dc.theorem = t;
    dc.k = measure_k;
    dc.averaged = averaged;
    dc.informational = b.informational;
    dc.undefined = b.undefined || b.vstar_degenerate || bg.undefined ||
                   bg.vstar_degenerate;
    dc.measured_m = b.measured_m;
    dc.se_m = averaged ? row.mean_m_inner.se : row.m_inner.se;
    dc.bound_m = b.total_m;
    dc.measured_grad = b.measured_grad;
    dc.se_grad = averaged ? row.mean_grad_inner.se : row.grad_inner.se;
    dc.bound_grad = bg.total_grad;
    dc.pass_m = dc.measured_m <= dc.bound_m + 3.0 * dc.se_m;
    dc.pass_grad = dc.measured_grad <= dc.bound_grad + 3.0 * dc.se_grad;
    rep.dominations.push_back(dc);
  };

  for (Theorem t : applicable_theorems(cfg.schedule.family)) {
    switch (t) {
      case Theorem::C1:
      case Theorem::D1:
        for (std::uint64_t k : rep.checkpoints) emit(t, k, k, false);
        break;
      case Theorem::Cor1:
        emit(t, 0, cfg.steps, false);
        break;
      default:  // averaged bounds, horizon = measurement point
        for (std::uint64_t k : rep.checkpoints) emit(t, k, k, true);
    }
  }
  return rep;
}

std::string measure_csv(const std::vector<MeasureRow>& rows) {
  std::string out =
      "k,m_inner,grad_inner,mean_m_inner,mean_grad_inner,grad_norm_sq,"
      "alpha_k,beta1_k,beta2_k\n";
  char buf[320];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  (unsigned long long)r.k, r.m_inner, r.grad_inner,
                  r.mean_m_inner, r.mean_grad_inner, r.grad_norm_sq,
                  r.alpha_k, r.beta1_k, r.beta2_k);
    out += buf;
  }
  return out;
}

namespace {

// JSON has no inf/nan literals; spell them out so nothing turns into null.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

json stats_json(const TrajectoryStats& st) {
  return json{{"G_hat", num(st.G_hat)},
              {"B_hat", num(st.B_hat)},
              {"D_hat", num(st.D_hat)},
              {"Dtilde_hat", num(st.Dtilde_hat)},
              {"M_hat", num(st.M_hat)},
              {"vstar_hat", num(st.vstar_hat)},
              {"sigma2_over_b", num(st.sigma2_over_b)},
              {"dim", st.dim},
              {"records", st.records},
              {"vstar_degenerate", st.vstar_degenerate()}};
}

json schedule_json(const ScheduleSpec& s) {
  return json{{"family", to_string(s.family)}, {"alpha", num(s.alpha)},
              {"beta1", num(s.beta1)},         {"beta2", num(s.beta2)},
              {"a", num(s.a)},                 {"b1", num(s.b1)},
              {"b2", num(s.b2)}};
}

json config_json(const RunConfig& cfg) {
  json j{{"problem", cfg.problem},
         {"dim", cfg.dim},
         {"sigma2", num(cfg.sigma2)},
         {"n_components", cfg.n_components},
         {"schedule", schedule_json(cfg.schedule)},
         {"epsilon", num(cfg.step.epsilon)},
         {"max_correction", cfg.step.max_correction},
         {"batch", cfg.batch},
         {"steps", cfg.steps},
         {"master_seed", cfg.master_seed},
         {"seed_indices", cfg.seed_indices},
         {"stride", cfg.stride}};
  j["theta0"] = cfg.theta0 ? vec_json(*cfg.theta0) : json("default");
  j["theta_ref"] = cfg.theta_ref ? vec_json(*cfg.theta_ref) : json("star");
  return j;
}

json bound_json(const BoundReport& b) {
  json terms = json::object();
  for (const auto& t : b.terms) terms[t.name] = num(t.value);
  return json{{"theorem", to_string(b.theorem)},
              {"horizon", b.horizon},
              {"terms", terms},
              {"total_m", num(b.total_m)},
              {"total_grad", num(b.total_grad)},
              {"vstar_degenerate", b.vstar_degenerate},
              {"undefined", b.undefined},
              {"informational", b.informational},
              {"measured_m", num(b.measured_m)},
              {"measured_grad", num(b.measured_grad)},
              {"slack_m", num(b.slack_m())},
              {"slack_grad", num(b.slack_grad())}};
}

json row_json(const MeasureRow& r) {
  return json{{"k", r.k},
              {"m_inner", num(r.m_inner)},
              {"grad_inner", num(r.grad_inner)},
              {"mean_m_inner", num(r.mean_m_inner)},
              {"mean_grad_inner", num(r.mean_grad_inner)},
              {"grad_norm_sq", num(r.grad_norm_sq)},
              {"alpha_k", num(r.alpha_k)},
              {"beta1_k", num(r.beta1_k)},
              {"beta2_k", num(r.beta2_k)}};
}

json agg_json(const AggregatedRow& a) {
  auto ms = [](const MeanStderr& m) {
    return json{{"mean", num(m.mean)}, {"se", num(m.se)}};
  };
  return json{{"k", a.k},
              {"m_inner", ms(a.m_inner)},
              {"grad_inner", ms(a.grad_inner)},
              {"mean_m_inner", ms(a.mean_m_inner)},
              {"mean_grad_inner", ms(a.mean_grad_inner)},
              {"n", a.n}};
}

json seed_json(const SeedResult& sr) {
  json rows = json::array();
  for (const auto& r : sr.checkpoints) rows.push_back(row_json(r));
  json j{{"seed_index", sr.seed_index},
         {"stream_seed", sr.stream_seed},
         {"failed", sr.failed},
         {"error", sr.error},
         {"error_step", sr.error_step},
         {"vhat_monotone", sr.vhat_monotone},
         {"sign_violations", sr.sign_violations},
         {"theta_final", vec_json(sr.theta_final)},
         {"final_value", num(sr.final_value)},
         {"stats", stats_json(sr.stats)},
         {"checkpoint_rows", rows}};
  if (sr.stats_ref.records > 0) j["stats_ref"] = stats_json(sr.stats_ref);
  return j;
}

json domination_json(const DominationCheck& dc) {
  return json{{"theorem", to_string(dc.theorem)},
              {"k", dc.k},
              {"averaged", dc.averaged},
              {"informational", dc.informational},
              {"undefined", dc.undefined},
              {"measured_m", num(dc.measured_m)},
              {"se_m", num(dc.se_m)},
              {"bound_m", num(dc.bound_m)},
              {"pass_m", dc.pass_m},
              {"measured_grad", num(dc.measured_grad)},
              {"se_grad", num(dc.se_grad)},
              {"bound_grad", num(dc.bound_grad)},
              {"pass_grad", dc.pass_grad}};
}

void require_format(const std::string& format, bool& want_csv,
                    bool& want_json) {
  want_csv = format == "csv" || format == "both";
  want_json = format == "json" || format == "both";
  if (!want_csv && !want_json)
    throw std::invalid_argument("format must be csv, json, or both; got " +
                                format);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << text;
}

}  // namespace

std::string report_json(const RunReport& rep) {
  json j;
  j["config"] = config_json(rep.config);
  j["stride"] = rep.stride;
  j["checkpoints"] = rep.checkpoints;
  j["theta_star"] = vec_json(rep.theta_star);
  j["theta_ref"] = vec_json(rep.theta_ref);
  j["theta0"] = vec_json(rep.theta0);
  j["distinct_ref"] = rep.distinct_ref;
  j["sigma2"] = num(rep.sigma2);
  j["failed_seeds"] = rep.failed_seeds;
  j["pooled_stats"] = stats_json(rep.pooled);
  if (rep.distinct_ref) j["pooled_stats_ref"] = stats_json(rep.pooled_ref);
  json seeds = json::array();
  for (const auto& sr : rep.seeds) seeds.push_back(seed_json(sr));
  j["seeds"] = seeds;
  json agg = json::array();
  for (const auto& a : rep.aggregated) agg.push_back(agg_json(a));
  j["aggregated"] = agg;
  json bounds = json::array();
  for (const auto& b : rep.bounds) bounds.push_back(bound_json(b));
  j["bounds"] = bounds;
  if (rep.distinct_ref) {
    json br = json::array();
    for (const auto& b : rep.bounds_ref) br.push_back(bound_json(b));
    j["bounds_ref"] = br;
  }
  json doms = json::array();
  for (const auto& dc : rep.dominations)
    doms.push_back(domination_json(dc));
  j["verdicts"] = json{{"monotone_vhat", json{{"checked", rep.monotone_vhat_checked},
                                           {"ok", rep.monotone_vhat_ok}}},
                       {"vstar_positive", rep.vstar_positive},
                       {"sign_violations", rep.sign_violations},
                       {"dominations", doms},
                       {"all_pass", rep.all_pass()}};
  return j.dump(2);
}

std::vector<std::string> write_report_files(const RunReport& rep,
                                            const std::string& out_dir,
                                            const std::string& format) {
  bool want_csv = false, want_json = false;
  require_format(format, want_csv, want_json);
  namespace fs = std::filesystem;
  fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<std::string> written;
  if (want_json) {
    fs::path p = dir / "report.json";
    write_text(p, report_json(rep) + "\n");
    written.push_back(p.string());
  }
  if (want_csv)
    for (const auto& sr : rep.seeds) {
      fs::path p =
          dir / ("measures_seed" + std::to_string(sr.seed_index) + ".csv");
      write_text(p, measure_csv(sr.rows));
      written.push_back(p.string());
    }
  return written;
}

namespace {

std::string cell_label(const SweepGrid& g, ScheduleFamily f, double alpha,
                       double beta1, double beta2, double b2,
                       std::size_t batch) {
  std::string label;
  char buf[64];
  auto add = [&](const std::string& part) {
    if (!label.empty()) label += ',';
    label += part;
  };
  if (g.families.size() > 1) add("family=" + to_string(f));
  if (g.alphas.size() > 1) {
    std::snprintf(buf, sizeof buf, "alpha=%g", alpha);
    add(buf);
  }
  if (g.beta1s.size() > 1) {
    std::snprintf(buf, sizeof buf, "beta1=%g", beta1);
    add(buf);
  }
  if (g.beta2s.size() > 1) {
    std::snprintf(buf, sizeof buf, "beta2=%g", beta2);
    add(buf);
  }
  if (g.b2s.size() > 1) {
    std::snprintf(buf, sizeof buf, "b2=%g", b2);
    add(buf);
  }
  if (g.batches.size() > 1) {
    std::snprintf(buf, sizeof buf, "batch=%zu", batch);
    add(buf);
  }
  return label.empty() ? "base" : label;
}

void fill_trends(SweepResult& res, const SweepGrid& g) {
  for (const auto& row : res.table)
    if (row.failed) return;
  int varying = (g.families.size() > 1) + (g.alphas.size() > 1) +
                (g.beta1s.size() > 1) + (g.beta2s.size() > 1) +
                (g.b2s.size() > 1) + (g.batches.size() > 1);
  if (varying != 1) return;
  auto strictly_dec = [&](double SweepRow::*member) {
    for (std::size_t i = 1; i < res.table.size(); ++i)
      if (!(res.table[i].*member < res.table[i - 1].*member)) return false;
    return true;
  };
  if (g.beta1s.size() > 1) {
    res.trends.push_back({"beta1", "C3", strictly_dec(&SweepRow::C3)});
    res.trends.push_back({"beta1", "mean_m_inner_at_K",
                          strictly_dec(&SweepRow::mean_m_at_K)});
  }
  if (g.batches.size() > 1)
    res.trends.push_back({"batch", "mean_m_inner_at_K",
                          strictly_dec(&SweepRow::mean_m_at_K)});
}

}  // namespace

SweepResult sweep(const RunConfig& base, const SweepGrid& grid) {
  auto families = grid.families.empty()
                      ? std::vector<ScheduleFamily>{base.schedule.family}
                      : grid.families;
  auto alphas = grid.alphas.empty() ? std::vector<double>{base.schedule.alpha}
                                    : grid.alphas;
  auto beta1s = grid.beta1s.empty() ? std::vector<double>{base.schedule.beta1}
                                    : grid.beta1s;
  auto beta2s = grid.beta2s.empty() ? std::vector<double>{base.schedule.beta2}
                                    : grid.beta2s;
  auto b2s =
      grid.b2s.empty() ? std::vector<double>{base.schedule.b2} : grid.b2s;
  auto batches = grid.batches.empty() ? std::vector<std::size_t>{base.batch}
                                      : grid.batches;

  SweepResult res;
  for (ScheduleFamily f : families)
    for (double alpha : alphas)
      for (double beta1 : beta1s)
        for (double beta2 : beta2s)
          for (double b2 : b2s)
            for (std::size_t batch : batches) {
              RunConfig cfg = base;
              cfg.schedule.family = f;
              cfg.schedule.alpha = alpha;
              cfg.schedule.beta1 = beta1;
              cfg.schedule.beta2 = beta2;
              cfg.schedule.b2 = b2;
              cfg.batch = batch;

              SweepRow row;
              row.label =
                  cell_label(grid, f, alpha, beta1, beta2, b2, batch);
              row.family = f;
              row.alpha = alpha;
              row.beta1 = beta1;
              row.beta2 = beta2;
              row.b2 = b2;
              row.batch = batch;
              try {
                RunReport r = run_experiment(cfg);
                if (r.failed_seeds == r.seeds.size()) {
                  row.failed = true;
                  row.error = r.seeds.front().error;
                } else {
                  const auto& ag = r.aggregated_at(cfg.steps);
                  row.mean_m_at_K = ag.mean_m_inner.mean;
                  row.se_m_at_K = ag.mean_m_inner.se;
                  row.mean_grad_at_K = ag.mean_grad_inner.mean;
                  row.se_grad_at_K = ag.mean_grad_inner.se;
                  row.C3 = (f == ScheduleFamily::DimAll)
                               ? std::numeric_limits<double>::quiet_NaN()
                               : (1.0 - beta1) / beta1 * r.pooled.D_hat *
                                     r.pooled.G_hat;
                }
                res.reports.push_back(std::move(r));
              } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
                res.reports.emplace_back();  // keeps cell order aligned
              }
              res.table.push_back(std::move(row));
            }
  fill_trends(res, grid);
  return res;
}

std::string sweep_json(const SweepResult& res) {
  json table = json::array();
  for (const auto& r : res.table)
    table.push_back(json{{"label", r.label},
                         {"family", to_string(r.family)},
                         {"alpha", num(r.alpha)},
                         {"beta1", num(r.beta1)},
                         {"beta2", num(r.beta2)},
                         {"b2", num(r.b2)},
                         {"batch", r.batch},
                         {"failed", r.failed},
                         {"error", r.error},
                         {"mean_m_at_K", num(r.mean_m_at_K)},
                         {"se_m_at_K", num(r.se_m_at_K)},
                         {"mean_grad_at_K", num(r.mean_grad_at_K)},
                         {"se_grad_at_K", num(r.se_grad_at_K)},
                         {"C3", num(r.C3)}});
  json trends = json::array();
  for (const auto& t : res.trends)
    trends.push_back(json{{"axis", t.axis},
                          {"quantity", t.quantity},
                          {"strictly_decreasing", t.strictly_decreasing}});
  json j{{"cells", res.table.size()}, {"table", table}, {"trends", trends}};
  return j.dump(2);
}

std::vector<std::string> write_sweep_files(const SweepResult& res,
                                           const std::string& out_dir,
                                           const std::string& format) {
  bool want_csv = false, want_json = false;
  require_format(format, want_csv, want_json);
  namespace fs = std::filesystem;
  fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<std::string> written;
  for (std::size_t i = 0; i < res.reports.size(); ++i) {
    // Cells that threw before producing a report have a placeholder only.
    if (res.table[i].failed && res.reports[i].seeds.empty()) continue;
    auto sub = write_report_files(res.reports[i],
                                  (dir / ("cell" + std::to_string(i))).string(),
                                  format);
    written.insert(written.end(), sub.begin(), sub.end());
  }
  if (want_json) {
    fs::path p = dir / "sweep.json";
    write_text(p, sweep_json(res) + "\n");
    written.push_back(p.string());
  }
  return written;
}

}  // namespace adamcheck
