// Command-line front end: synthetic stream generation, prequential and
// k-fold evaluation, runtime benchmarking, and threshold calibration.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "olcwa/drift.hpp"
#include "olcwa/harness.hpp"

namespace fs = std::filesystem;

namespace {

int cmd_generate(const std::string& config_path, const std::string& out_path) {
  const olcwa::RunConfig cfg = olcwa::load_run_config(config_path);
  if (!cfg.synthetic) {
    throw olcwa::ConfigError("generate: config must describe a synthetic "
                             "stream");
  }
  const olcwa::Stream stream = olcwa::generate(*cfg.synthetic);
  olcwa::export_csv(stream, out_path);
  std::cout << "wrote " << stream.size() << " samples (d=" << stream.dim()
            << ", classes=" << stream.n_classes << ") to " << out_path
            << "\n";
  return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            int kfold) {
  const olcwa::RunConfig cfg = olcwa::load_run_config(config_path);
  fs::create_directories(out_dir);
  olcwa::write_manifest(cfg, (fs::path(out_dir) / "manifest.json").string());

  if (kfold > 0) {
    olcwa::RunConfig kcfg = cfg;
    kcfg.folds = kfold;
    const auto rows = olcwa::run_kfold(kcfg);
    olcwa::write_kfold_csv(rows, (fs::path(out_dir) / "kfold.csv").string());
    std::printf("%-12s %14s %8s\n", "learner", "mean_accuracy", "folds");
    for (const auto& row : rows) {
      std::printf("%-12s %14.4f %8zu\n", row.learner.c_str(),
                  row.mean_accuracy, row.fold_accuracy.size());
    }
    return 0;
  }

  const auto result = olcwa::run_prequential(cfg);
  olcwa::write_results_csv(result,
                           (fs::path(out_dir) / "results.csv").string());
  olcwa::write_mean_curves_csv(
      result, (fs::path(out_dir) / "mean_curves.csv").string());
  std::printf("%-12s %6s %10s %10s %10s\n", "learner", "seed", "final_acc",
              "mean_acc", "seconds");
  for (const auto& s : result.summaries) {
    std::printf("%-12s %6llu %10.4f %10.4f %10.4f\n", s.learner.c_str(),
                static_cast<unsigned long long>(s.seed), s.final_accuracy,
                s.mean_prequential_accuracy, s.wall_seconds);
  }
  std::cout << "records: " << result.records.size() << " -> "
            << (fs::path(out_dir) / "results.csv").string() << "\n";
  return 0;
}

int cmd_bench(const std::string& config_path, int reps) {
  const olcwa::RunConfig cfg = olcwa::load_run_config(config_path);
  const auto rows = olcwa::measure_runtime(cfg, reps);
  std::printf("%-12s %12s\n", "learner", "seconds");
  for (const auto& row : rows) {
    std::printf("%-12s %12.5f\n", row.learner.c_str(), row.seconds);
  }
  return 0;
}

int cmd_calibrate(double rho, double mu, double sigma, double zeta) {
  const double z = olcwa::inv_norm_cdf(1.0 - rho);
  const double tau = z * sigma;
  std::printf("rho   = %g\n", rho);
  std::printf("z     = %.6f\n", z);
  std::printf("tau   = %.6f  (z * sigma, sigma = %g)\n", tau, sigma);
  std::printf("safe  = [%.6f, %.6f]  (mu = %g, zeta = %g)\n", mu - zeta,
              mu + zeta, mu, zeta);
  std::printf("low   = %.6f  (monitored tail for higher-is-better KPIs)\n",
              mu - zeta - tau);
  std::printf("high  = %.6f  (monitored tail for lower-is-better KPIs)\n",
              mu + zeta + tau);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming classification benchmark: drift-aware weighted-"
               "average classifier, online baselines, synthetic streams"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "out";
  int kfold = 0;
  int reps = 3;
  double rho = 0.01;
  double mu = 0.9;
  double sigma = 0.01;
  double zeta = 0.005;

  auto* gen = app.add_subcommand("generate", "write a synthetic stream CSV");
  gen->add_option("--spec", config_path, "run config JSON with a stream spec")
      ->required();
  gen->add_option("--out", out_path, "output CSV path")->required();

  auto* run = app.add_subcommand("run", "prequential or k-fold evaluation");
  run->add_option("--config", config_path, "run config JSON")->required();
  run->add_option("--out", out_path, "output directory");
  run->add_option("--kfold", kfold, "fold count; 0 = prequential mode");

  auto* bench = app.add_subcommand("bench", "wall-clock runtime per learner");
  bench->add_option("--config", config_path, "run config JSON")->required();
  bench->add_option("--reps", reps, "repetitions (median reported)");

  auto* cal = app.add_subcommand("calibrate",
                                 "print detection thresholds for a false-"
                                 "alarm probability");
  cal->add_option("--rho", rho, "false-alarm probability in (0,1)")
      ->required();
  cal->add_option("--mu", mu, "demo KPI mean");
  cal->add_option("--sigma", sigma, "demo KPI standard deviation");
  cal->add_option("--zeta", zeta, "safe band half-width");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(config_path, out_path);
    }
    if (run->parsed()) {
      return cmd_run(config_path, out_path, kfold);
    }
    if (bench->parsed()) {
      return cmd_bench(config_path, reps);
    }
    if (cal->parsed()) {
      return cmd_calibrate(rho, mu, sigma, zeta);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
