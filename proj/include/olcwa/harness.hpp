#ifndef OLCWA_HARNESS_HPP_
#define OLCWA_HARNESS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "olcwa/baselines.hpp"
#include "olcwa/datagen.hpp"
#include "olcwa/model.hpp"

namespace olcwa {

/// Uniform driver-facing view of one online learner. The driver calls
/// predict strictly before train for every scored batch (test-then-train).
class StreamLearner {
 public:
  explicit StreamLearner(std::string name) : name_(std::move(name)) {}
  virtual ~StreamLearner() = default;

  const std::string& name() const { return name_; }

  virtual void train(const MiniBatch& batch) = 0;
  virtual Eigen::VectorXi predict(const Eigen::MatrixXd& features) const = 0;

  virtual bool has_proba() const { return false; }
  virtual Eigen::VectorXd proba(const Eigen::MatrixXd& features) const;

  /// Step observability for adaptive learners; null otherwise.
  virtual const StepReport* last_report() const { return nullptr; }

 private:
  std::string name_;
};

struct LearnerSpec {
  std::string name;
  std::string type;  // "olcwa" or a baseline kind
  OlcwaConfig olcwa;
  BaselineConfig baseline;
};

/// Learner factory; trains lazily, so the first train() call on an olcwa
/// learner performs the initial fit.
std::unique_ptr<StreamLearner> make_learner(const LearnerSpec& spec);

struct RunConfig {
  std::optional<StreamSpec> synthetic;
  std::string csv_path;  // used when synthetic is absent
  std::vector<LearnerSpec> learners;
  long batch_size = 50;
  int folds = 5;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};

  void validate() const;
  Stream load_stream(std::uint64_t seed) const;
};

RunConfig load_run_config(const std::string& path);

/// One scored batch of one (learner, seed) run.
struct BatchRecord {
  std::string learner;
  std::uint64_t seed = 0;
  long t = 0;
  double kpi_acc = 0.0;
  double kpi_loss = 0.0;  // NaN for learners without probabilities
  std::string verdict = "-";
  double alpha = 0.0;     // NaN for baselines
  double cum_regret = 0.0;
};

struct RunSummary {
  std::string learner;
  std::uint64_t seed = 0;
  double final_accuracy = 0.0;
  double mean_prequential_accuracy = 0.0;
  double wall_seconds = 0.0;
};

/// Per-batch KPI means across seeds for one learner.
struct MeanCurvePoint {
  std::string learner;
  long t = 0;
  double mean_kpi_acc = 0.0;
  double mean_kpi_loss = 0.0;  // NaN when no seed defines it
};

struct PrequentialResult {
  std::vector<BatchRecord> records;
  std::vector<RunSummary> summaries;
  std::vector<MeanCurvePoint> mean_curves;  // averaged over seeds
};

/// Cumulative online loss against the hindsight comparator's loss on the
/// same batches.
class RegretTracker {
 public:
  void record(double online_batch_loss);
  void finalize(const std::vector<double>& comparator_batch_losses);

  long rounds() const { return static_cast<long>(online_.size()); }
  bool finalized() const { return finalized_; }
  double cumulative_online() const;
  double comparator_loss() const;
  /// R_t for t in 1..rounds(); only valid after finalize().
  const std::vector<double>& curve() const;

 private:
  std::vector<double> online_;
  std::vector<double> curve_;
  bool finalized_ = false;
};

/// Test-then-train over `batches`: batch 0 only trains, every later batch
/// is scored first and trained second.
std::vector<BatchRecord> drive_prequential(StreamLearner& learner,
                                           const std::vector<MiniBatch>& batches,
                                           std::uint64_t seed);

/// Full prequential evaluation: every learner over every seed, regret
/// against a hindsight batch fit per stream. (learner, seed) runs execute
/// in parallel and merge in configuration order.
PrequentialResult run_prequential(const RunConfig& cfg);

void write_results_csv(const PrequentialResult& result,
                       const std::string& path);
void write_mean_curves_csv(const PrequentialResult& result,
                           const std::string& path);
void write_manifest(const RunConfig& cfg, const std::string& path);

struct KfoldRow {
  std::string learner;
  std::vector<double> fold_accuracy;  // per (seed, fold)
  double mean_accuracy = 0.0;
};

/// Stratified k-fold: online learners stream the training fold once, then
/// score the held-out fold. A "batch" reference row (full-batch logistic,
/// one-vs-rest for multiclass) is always included.
std::vector<KfoldRow> run_kfold(const RunConfig& cfg);

void write_kfold_csv(const std::vector<KfoldRow>& rows,
                     const std::string& path);

struct RuntimeRow {
  std::string learner;
  double seconds = 0.0;  // median over repetitions, data generation excluded
};

std::vector<RuntimeRow> measure_runtime(const RunConfig& cfg, int reps = 3);

/// Hindsight comparator: batch logistic fit on the whole stream.
ParamVector fit_hindsight(const Stream& stream);

}  // namespace olcwa

#endif  // OLCWA_HARNESS_HPP_
