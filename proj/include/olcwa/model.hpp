#ifndef OLCWA_MODEL_HPP_
#define OLCWA_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "olcwa/drift.hpp"
#include "olcwa/geometry.hpp"
#include "olcwa/solver.hpp"

namespace olcwa {

enum class KpiKind { Accuracy, LogLoss };

const char* to_string(KpiKind kind);

struct KpiSpec {
  KpiKind kind = KpiKind::Accuracy;
  KpiOrientation orientation = KpiOrientation::HigherIsBetter;

  static KpiSpec accuracy() {
    return {KpiKind::Accuracy, KpiOrientation::HigherIsBetter};
  }
  static KpiSpec logloss() {
    return {KpiKind::LogLoss, KpiOrientation::LowerIsBetter};
  }
};

struct OlcwaConfig {
  double alpha0 = 0.5;
  double rho = 0.01;
  double zeta = 0.005;
  std::vector<KpiSpec> kpis = {KpiSpec::accuracy()};
  KpiWindowParams window;  // auto_size must be resolved before model creation
  SolverConfig solver;
  int n_bins = 10;
  double eps_parallel = kParallelEpsDefault;
  bool tuner_enabled = true;

  void validate() const;
};

/// Per-batch observability record.
struct StepReport {
  long t = 0;
  std::vector<double> kpi_values;        // one per configured KPI
  std::optional<DriftVerdict> verdict;   // absent until windows are full
  double alpha_applied = 0.0;
  PlaneRelation::Kind relation = PlaneRelation::Kind::Intersecting;
};

/// Online binary classifier: blends the base hyperplane direction with each
/// mini-batch's fitted direction, anchored at their intersection, and
/// retunes the blend weight when the KPI window flags drift.
class OlcwaModel {
 public:
  OlcwaModel(const MiniBatch& first_batch, OlcwaConfig cfg);

  StepReport step(const MiniBatch& batch);
  Eigen::VectorXd predict(const Eigen::MatrixXd& features) const;

  const ParamVector& base() const { return w_base_; }
  long iteration() const { return t_; }
  double last_alpha() const { return last_alpha_; }
  const OlcwaConfig& config() const { return cfg_; }
  const KpiWindow& window(std::size_t i) const { return windows_.at(i); }

 private:
  double measure_kpi(const KpiSpec& spec, const MiniBatch& batch) const;

  OlcwaConfig cfg_;
  ParamVector w_base_;
  std::vector<KpiWindow> windows_;
  long t_ = 0;
  double last_alpha_;
};

/// Mini-batch with class labels in {1..n_classes}.
struct MulticlassBatch {
  Eigen::MatrixXd features;
  Eigen::VectorXi labels;

  MulticlassBatch() = default;
  MulticlassBatch(Eigen::MatrixXd x, Eigen::VectorXi y, int n_classes);

  Eigen::Index size() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }
};

/// One-vs-rest wrapper: an independent OlcwaModel per class, each with its
/// own KPI windows and smoothing factor.
class OvrModel {
 public:
  OvrModel(const MulticlassBatch& first_batch, int n_classes, OlcwaConfig cfg);

  std::vector<StepReport> step(const MulticlassBatch& batch);
  Eigen::MatrixXd predict_proba(const Eigen::MatrixXd& features) const;
  Eigen::VectorXi predict(const Eigen::MatrixXd& features) const;

  int n_classes() const { return n_classes_; }
  const OlcwaModel& learner(int k) const { return learners_.at(k); }

 private:
  int n_classes_;
  std::vector<OlcwaModel> learners_;
};

/// {0,1} view of a multiclass batch for the target class (1-based).
MiniBatch ovr_view(const MulticlassBatch& batch, int target_class);

}  // namespace olcwa

#endif  // OLCWA_MODEL_HPP_
