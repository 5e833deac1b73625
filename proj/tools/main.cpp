#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adamcheck/runner.hpp"

namespace {

using namespace adamcheck;

struct CliOptions {
  std::string problem = "quadratic";
  std::size_t dim = 0;
  double sigma2 = 1.0;
  std::size_t ncomp = 16;
  std::string family = "const_all";
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double a = 0.5;
  double b1 = 1.0;
  double b2 = 1.0;
  std::size_t batch = 16;
  std::uint64_t steps = 1000;
  std::uint64_t seeds = 1;
  std::vector<std::uint64_t> seed_list;
  std::uint64_t master_seed = 12345;
  double epsilon = 1e-8;
  bool max_correction = false;
  std::vector<double> theta0;
  std::vector<double> theta_ref;
  std::uint64_t stride = 0;
  std::string out_dir = "out";
  std::string format = "both";
  bool check = false;
};

struct SweepAxes {
  std::vector<std::string> families;
  std::vector<double> alphas;
  std::vector<double> beta1s;
  std::vector<double> beta2s;
  std::vector<double> b2s;
  std::vector<std::size_t> batches;
};

RunConfig to_run_config(const CliOptions& o) {
  RunConfig cfg;
  cfg.problem = o.problem;
  cfg.dim = o.dim;
  cfg.sigma2 = o.sigma2;
  cfg.n_components = o.ncomp;
  cfg.schedule.family = parse_family(o.family);
  cfg.schedule.alpha = o.alpha;
  cfg.schedule.beta1 = o.beta1;
  cfg.schedule.beta2 = o.beta2;
  cfg.schedule.a = o.a;
  cfg.schedule.b1 = o.b1;
  cfg.schedule.b2 = o.b2;
  cfg.step.epsilon = o.epsilon;
  cfg.step.max_correction = o.max_correction;
  cfg.batch = o.batch;
  cfg.steps = o.steps;
  cfg.master_seed = o.master_seed;
  if (!o.seed_list.empty()) {
    cfg.seed_indices = o.seed_list;
  } else {
    cfg.seed_indices.clear();
    for (std::uint64_t i = 0; i < o.seeds; ++i) cfg.seed_indices.push_back(i);
  }
  if (!o.theta0.empty()) cfg.theta0 = o.theta0;
  if (!o.theta_ref.empty()) cfg.theta_ref = o.theta_ref;
  cfg.stride = o.stride;
  return cfg;
}

void print_report_summary(const RunReport& rep) {
  const RunConfig& cfg = rep.config;
  std::printf("problem=%s dim=%zu family=%s steps=%llu batch=%zu seeds=%zu\n",
              cfg.problem.c_str(), rep.theta_star.size(),
              to_string(cfg.schedule.family).c_str(),
              (unsigned long long)cfg.steps, cfg.batch,
              cfg.seed_indices.size());
  for (const auto& sr : rep.seeds) {
    if (sr.failed)
      std::printf("seed %llu: FAILED at step %llu: %s\n",
                  (unsigned long long)sr.seed_index,
                  (unsigned long long)sr.error_step, sr.error.c_str());
    else
      std::printf("seed %llu: ok, final value %.6g\n",
                  (unsigned long long)sr.seed_index, sr.final_value);
  }
  if (rep.failed_seeds == rep.seeds.size()) return;
  const TrajectoryStats& st = rep.pooled;
  std::printf(
      "pooled: G=%.6g B=%.6g D=%.6g Dtilde=%.6g M=%.6g vstar=%.6g\n",
      st.G_hat, st.B_hat, st.D_hat, st.Dtilde_hat, st.M_hat, st.vstar_hat);
  std::size_t informational = 0;
  for (const auto& b : rep.bounds) informational += b.informational ? 1 : 0;
  std::printf("bounds evaluated: %zu (%zu informational)\n",
              rep.bounds.size(), informational);
  std::size_t pass = 0, counted = 0;
  for (const auto& dc : rep.dominations) {
    if (dc.informational) continue;
    ++counted;
    pass += (dc.pass_m && dc.pass_grad) ? 1 : 0;
  }
  std::printf("dominations: %zu/%zu pass\n", pass, counted);
  if (rep.monotone_vhat_checked)
    std::printf("monotone second moment: %s\n",
                rep.monotone_vhat_ok ? "held at every step" : "VIOLATED");
  if (rep.sign_violations > 0)
    std::printf("note: %llu momentum measures went negative\n",
                (unsigned long long)rep.sign_violations);
  std::printf("verdict: %s\n", rep.all_pass() ? "ALL PASS" : "NOT ALL PASS");
}

int do_run(const CliOptions& o) {
  RunReport rep = run_experiment(to_run_config(o));
  auto files = write_report_files(rep, o.out_dir, o.format);
  print_report_summary(rep);
  for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
  if (rep.failed_seeds == rep.seeds.size()) return 3;
  if (o.check && !rep.all_pass()) return 4;
  return 0;
}

int do_sweep(const CliOptions& o, const SweepAxes& ax) {
  SweepGrid grid;
  for (const auto& name : ax.families)
    grid.families.push_back(parse_family(name));
  grid.alphas = ax.alphas;
  grid.beta1s = ax.beta1s;
  grid.beta2s = ax.beta2s;
  grid.b2s = ax.b2s;
  grid.batches = ax.batches;

  SweepResult res = sweep(to_run_config(o), grid);
  auto files = write_sweep_files(res, o.out_dir, o.format);
  std::printf("%zu cells\n", res.table.size());
  for (const auto& row : res.table) {
    if (row.failed)
      std::printf("%-24s FAILED: %s\n", row.label.c_str(), row.error.c_str());
    else
      std::printf("%-24s mean_m_at_K=%.6g se=%.3g C3=%.6g\n",
                  row.label.c_str(), row.mean_m_at_K, row.se_m_at_K, row.C3);
  }
  for (const auto& t : res.trends)
    std::printf("trend: %s in %s %s\n", t.quantity.c_str(), t.axis.c_str(),
                t.strictly_decreasing ? "strictly decreasing"
                                      : "NOT strictly decreasing");
  for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
  bool all_failed =
      !res.table.empty() &&
      std::all_of(res.table.begin(), res.table.end(),
                  [](const SweepRow& r) { return r.failed; });
  if (all_failed) return 3;
  bool trend_broken =
      o.check && std::any_of(res.trends.begin(), res.trends.end(),
                             [](const TrendDiagnostic& t) {
                               return !t.strictly_decreasing;
                             });
  return trend_broken ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adam schedule runner and bound checker"};
  app.require_subcommand(1);

  CliOptions o;
  app.set_config("--config", "",
                 "Flat key=value config file mirroring the long flags; "
                 "flags given on the command line take precedence");
  app.add_option("--problem", o.problem,
                 "quadratic, quartic, power32, rosenbrock or finite_sum")
      ->capture_default_str();
  app.add_option("--dim", o.dim, "Problem dimension, 0 = problem default")
      ->capture_default_str();
  app.add_option("--sigma2", o.sigma2, "Oracle noise variance bound")
      ->capture_default_str();
  app.add_option("--ncomp", o.ncomp, "Finite-sum component count")
      ->capture_default_str();
  app.add_option("--family", o.family, "Schedule family name")
      ->capture_default_str();
  app.add_option("--alpha", o.alpha, "Constant step size")
      ->capture_default_str();
  app.add_option("--beta1", o.beta1, "Constant first-moment factor")
      ->capture_default_str();
  app.add_option("--beta2", o.beta2, "Constant second-moment factor")
      ->capture_default_str();
  app.add_option("--a", o.a, "Step-size decay exponent")
      ->capture_default_str();
  app.add_option("--b1", o.b1, "First-moment decay exponent")
      ->capture_default_str();
  app.add_option("--b2", o.b2, "Second-moment decay exponent")
      ->capture_default_str();
  app.add_option("--batch", o.batch, "Oracle mini-batch size")
      ->capture_default_str();
  app.add_option("--steps", o.steps, "Horizon K; updates run k = 0..K")
      ->capture_default_str();
  app.add_option("--seeds", o.seeds, "Number of seeds (indices 0..N-1)")
      ->capture_default_str();
  app.add_option("--seed-list", o.seed_list,
                 "Explicit seed indices, comma separated; overrides --seeds")
      ->delimiter(',');
  app.add_option("--master-seed", o.master_seed,
                 "Base seed; per-seed streams are derived from it")
      ->capture_default_str();
  app.add_option("--epsilon", o.epsilon,
                 "Denominator stabilizer; 0 selects the strict variant")
      ->capture_default_str();
  app.add_flag("--max-correction", o.max_correction,
               "Enforce the monotone second-moment running max");
  app.add_option("--theta0", o.theta0,
                 "Initial iterate, comma separated; empty = problem default")
      ->delimiter(',');
  app.add_option("--theta-ref", o.theta_ref,
                 "Reference point for the gradient measure; empty = the "
                 "stationary point")
      ->delimiter(',');
  app.add_option("--stride", o.stride,
                 "Logging stride; 0 = max(1, steps/1000)")
      ->capture_default_str();
  app.add_option("--out-dir", o.out_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--format", o.format, "Output selection")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
  app.add_flag("--check", o.check,
               "Exit nonzero when a non-informational verdict fails");

  auto* run_cmd =
      app.add_subcommand("run", "Run one experiment and write reports");
  run_cmd->fallthrough();

  SweepAxes ax;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run a grid of experiments over schedule axes");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--families", ax.families, "Family names to sweep")
      ->delimiter(',');
  sweep_cmd->add_option("--alphas", ax.alphas, "Step sizes to sweep")
      ->delimiter(',');
  sweep_cmd->add_option("--beta1s", ax.beta1s, "beta1 values to sweep")
      ->delimiter(',');
  sweep_cmd->add_option("--beta2s", ax.beta2s, "beta2 values to sweep")
      ->delimiter(',');
  sweep_cmd->add_option("--b2s", ax.b2s, "b2 exponents to sweep")
      ->delimiter(',');
  sweep_cmd->add_option("--batches", ax.batches, "Batch sizes to sweep")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) return do_run(o);
    return do_sweep(o, ax);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
