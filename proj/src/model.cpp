#include "olcwa/model.hpp"

#include <cmath>

namespace olcwa {

const char* to_string(KpiKind kind) {
  switch (kind) {
    case KpiKind::Accuracy: return "accuracy";
    case KpiKind::LogLoss: return "logloss";
  }
  return "?";
}

void OlcwaConfig::validate() const {
  if (!(alpha0 > 0.0) || alpha0 > 1.0) {
    throw ConfigError("OlcwaConfig: alpha0 must be in (0,1]");
  }
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw ConfigError("OlcwaConfig: rho must be in (0,1)");
  }
  if (zeta < 0.0) {
    throw ConfigError("OlcwaConfig: zeta must be >= 0");
  }
  if (kpis.empty()) {
    throw ConfigError("OlcwaConfig: need at least one KPI");
  }
  if (n_bins < 1) {
    throw ConfigError("OlcwaConfig: n_bins must be >= 1");
  }
  if (!(eps_parallel >= 0.0)) {
    throw ConfigError("OlcwaConfig: eps_parallel must be >= 0");
  }
  if (window.auto_size) {
    throw ConfigError("OlcwaConfig: resolve window.auto_size to a fixed "
                      "capacity before building a model");
  }
  solver.validate();
}

namespace {

OlcwaConfig validated(OlcwaConfig cfg) {
  cfg.validate();
  return cfg;
}

}  // namespace

OlcwaModel::OlcwaModel(const MiniBatch& first_batch, OlcwaConfig cfg)
    : cfg_(validated(std::move(cfg))),
      w_base_(fit_logistic(first_batch, cfg_.solver)),
      last_alpha_(cfg_.alpha0) {
  windows_.reserve(cfg_.kpis.size());
  for (const auto& kpi : cfg_.kpis) {
    windows_.emplace_back(cfg_.window.capacity, kpi.orientation, cfg_.zeta,
                          cfg_.rho);
  }
}

double OlcwaModel::measure_kpi(const KpiSpec& spec,
                               const MiniBatch& batch) const {
  switch (spec.kind) {
    case KpiKind::Accuracy: return kpi_accuracy(w_base_, batch);
    case KpiKind::LogLoss: return kpi_logloss(w_base_, batch);
  }
  throw Error("unknown KPI kind");
}

StepReport OlcwaModel::step(const MiniBatch& batch) {
  if (batch.dim() != w_base_.dim()) {
    throw DimensionMismatch("step: batch dim " + std::to_string(batch.dim()) +
                            " vs model dim " + std::to_string(w_base_.dim()));
  }
  const ParamVector w_inc = fit_logistic(batch, cfg_.solver, w_base_);
  const PlaneRelation relation =
      relate_planes(w_base_, w_inc, cfg_.eps_parallel);

  std::optional<Point> anchor;
  Eigen::VectorXd v_base_hat, v_inc_hat;
  double alpha_applied = cfg_.alpha0;

  if (relation.kind != PlaneRelation::Kind::Coincident) {
    anchor = relation.kind == PlaneRelation::Kind::Intersecting
                 ? *relation.point
                 : fallback_anchor(w_base_, w_inc, cfg_.alpha0);
    v_base_hat = normalize(extract_direction(w_base_));
    v_inc_hat = normalize(extract_direction(w_inc));
    const Eigen::VectorXd v_avg =
        blend_directions(v_base_hat, v_inc_hat, cfg_.alpha0);
    w_base_ = define_hyperplane(v_avg, *anchor);
  }

  StepReport report;
  report.relation = relation.kind;
  report.kpi_values.reserve(cfg_.kpis.size());
  for (std::size_t i = 0; i < cfg_.kpis.size(); ++i) {
    const double value = measure_kpi(cfg_.kpis[i], batch);
    report.kpi_values.push_back(value);
    windows_[i].push(value);
  }

  bool all_full = true;
  for (const auto& w : windows_) {
    all_full = all_full && w.full();
  }
  if (all_full) {
    std::vector<DriftVerdict> verdicts;
    verdicts.reserve(windows_.size());
    std::optional<Calibration> primary_cal;
    for (std::size_t i = 0; i < windows_.size(); ++i) {
      const Calibration cal = calibrate(windows_[i]);
      if (i == 0) {
        primary_cal = cal;
      }
      verdicts.push_back(classify(cal, windows_[i].newest(),
                                  windows_[i].orientation(), cfg_.zeta));
    }
    const DriftVerdict voted = vote(verdicts);
    report.verdict = voted;

    if (voted.is_drift() && cfg_.tuner_enabled) {
      // Drop the contaminated reading everywhere; the next batch's reading
      // reflects the recovery.
      for (auto& w : windows_) {
        w.remove_newest();
      }
      if (anchor) {
        const ScaleMap map =
            build_scale_map(*primary_cal, cfg_.zeta, cfg_.n_bins);
        const double alpha_prime = tune_alpha(map, voted);
        const Eigen::VectorXd v_avg_prime =
            blend_directions(v_base_hat, v_inc_hat, alpha_prime);
        w_base_ = define_hyperplane(v_avg_prime, *anchor);
        alpha_applied = alpha_prime;
      }
    }
  }

  last_alpha_ = alpha_applied;
  report.alpha_applied = alpha_applied;
  report.t = ++t_;
  return report;
}

Eigen::VectorXd OlcwaModel::predict(const Eigen::MatrixXd& features) const {
  return predict_proba(w_base_, features);
}

MulticlassBatch::MulticlassBatch(Eigen::MatrixXd x, Eigen::VectorXi y,
                                 int n_classes)
    : features(std::move(x)), labels(std::move(y)) {
  if (features.rows() == 0) {
    throw EmptyBatch("MulticlassBatch: no rows");
  }
  if (labels.size() != features.rows()) {
    throw DimensionMismatch("MulticlassBatch: row/label count mismatch");
  }
  if (!features.allFinite()) {
    throw Error("MulticlassBatch: non-finite features");
  }
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > n_classes) {
      throw Error("MulticlassBatch: label " + std::to_string(labels[i]) +
                  " outside {1.." + std::to_string(n_classes) + "}");
    }
  }
}

MiniBatch ovr_view(const MulticlassBatch& batch, int target_class) {
  Eigen::VectorXi binary(batch.labels.size());
  for (Eigen::Index i = 0; i < batch.labels.size(); ++i) {
    binary[i] = batch.labels[i] == target_class ? 1 : 0;
  }
  return MiniBatch(batch.features, std::move(binary));
}

OvrModel::OvrModel(const MulticlassBatch& first_batch, int n_classes,
                   OlcwaConfig cfg)
    : n_classes_(n_classes) {
  if (n_classes_ < 2) {
    throw ConfigError("OvrModel: need at least two classes");
  }
  learners_.reserve(static_cast<std::size_t>(n_classes_));
  for (int k = 1; k <= n_classes_; ++k) {
    learners_.emplace_back(ovr_view(first_batch, k), cfg);
  }
}

std::vector<StepReport> OvrModel::step(const MulticlassBatch& batch) {
  std::vector<StepReport> reports;
  reports.reserve(learners_.size());
  for (int k = 1; k <= n_classes_; ++k) {
    reports.push_back(learners_[static_cast<std::size_t>(k - 1)].step(
        ovr_view(batch, k)));
  }
  return reports;
}

Eigen::MatrixXd OvrModel::predict_proba(const Eigen::MatrixXd& features) const {
  Eigen::MatrixXd probs(features.rows(), n_classes_);
  for (int k = 0; k < n_classes_; ++k) {
    probs.col(k) = learners_[static_cast<std::size_t>(k)].predict(features);
  }
  return probs;
}

Eigen::VectorXi OvrModel::predict(const Eigen::MatrixXd& features) const {
  const Eigen::MatrixXd probs = predict_proba(features);
  Eigen::VectorXi labels(features.rows());
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    int best = 0;
    for (int k = 1; k < n_classes_; ++k) {
      if (probs(i, k) > probs(i, best)) {
        best = k;  // strict: ties keep the lowest class index
      }
    }
    labels[i] = best + 1;
  }
  return labels;
}

}  // namespace olcwa
