#include "olcwa/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace olcwa {

namespace {

// Largest double below 1; keeps probabilities strictly inside (0, 1).
const double kProbHi = std::nextafter(1.0, 0.0);
const double kProbLo = std::numeric_limits<double>::min();
const double kLossClamp = 1e-15;

Eigen::VectorXd margins(const ParamVector& w, const Eigen::MatrixXd& x) {
  if (x.cols() != w.dim()) {
    throw DimensionMismatch("predict: feature dim " + std::to_string(x.cols()) +
                            " vs model dim " + std::to_string(w.dim()));
  }
  return (x * w.weights).array() + w.bias;
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

MiniBatch::MiniBatch(Eigen::MatrixXd x, Eigen::VectorXi y)
    : features(std::move(x)), labels(std::move(y)) {
  if (features.rows() == 0) {
    throw EmptyBatch("MiniBatch: no rows");
  }
  if (features.cols() == 0) {
    throw DimensionMismatch("MiniBatch: zero feature dimension");
  }
  if (labels.size() != features.rows()) {
    throw DimensionMismatch("MiniBatch: " + std::to_string(features.rows()) +
                            " rows vs " + std::to_string(labels.size()) +
                            " labels");
  }
  if (!features.allFinite()) {
    throw Error("MiniBatch: non-finite features");
  }
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw Error("MiniBatch: label " + std::to_string(labels[i]) +
                  " outside {0,1}");
    }
  }
}

void SolverConfig::validate() const {
  if (max_iters < 1 || !(step_size > 0.0) || !(grad_tol > 0.0) ||
      l2_reg < 0.0) {
    throw ConfigError("SolverConfig: invalid field value");
  }
}

double logistic_objective(const ParamVector& w, const MiniBatch& batch,
                          double l2_reg) {
  const Eigen::VectorXd z = margins(w, batch.features);
  double nll = 0.0;
  for (Eigen::Index i = 0; i < batch.size(); ++i) {
    // -log sigma(z) = log(1 + e^-z), stable on both tails.
    const double zi = batch.labels[i] == 1 ? z[i] : -z[i];
    nll += zi >= 0.0 ? std::log1p(std::exp(-zi)) : -zi + std::log1p(std::exp(zi));
  }
  nll /= static_cast<double>(batch.size());
  return nll + 0.5 * l2_reg * (w.weights.squaredNorm() + w.bias * w.bias);
}

Eigen::VectorXd logistic_gradient(const ParamVector& w, const MiniBatch& batch,
                                  double l2_reg) {
  const Eigen::VectorXd z = margins(w, batch.features);
  Eigen::VectorXd resid(batch.size());
  for (Eigen::Index i = 0; i < batch.size(); ++i) {
    resid[i] = sigmoid(z[i]) - static_cast<double>(batch.labels[i]);
  }
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  Eigen::VectorXd grad(w.dim() + 1);
  grad.head(w.dim()) =
      inv_n * (batch.features.transpose() * resid) + l2_reg * w.weights;
  grad[w.dim()] = inv_n * resid.sum() + l2_reg * w.bias;
  return grad;
}

ParamVector fit_logistic(const MiniBatch& batch, const SolverConfig& cfg,
                         const std::optional<ParamVector>& warm_start) {
  cfg.validate();
  const Eigen::Index d = batch.dim();
  if (warm_start && warm_start->dim() != d) {
    throw DimensionMismatch("fit_logistic: warm start dim mismatch");
  }
  const int first = batch.labels[0];
  bool single_class = true;
  for (Eigen::Index i = 1; i < batch.labels.size() && single_class; ++i) {
    single_class = batch.labels[i] == first;
  }
  if (single_class && cfg.l2_reg == 0.0) {
    throw DegenerateBatch("fit_logistic: single-class batch with no l2");
  }

  ParamVector w = warm_start ? *warm_start
                             : ParamVector(Eigen::VectorXd::Zero(d), 0.0);
  double obj = logistic_objective(w, batch, cfg.l2_reg);
  constexpr double kArmijo = 1e-4;
  constexpr double kShrink = 0.5;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const Eigen::VectorXd grad = logistic_gradient(w, batch, cfg.l2_reg);
    if (grad.lpNorm<Eigen::Infinity>() <= cfg.grad_tol) {
      break;
    }
    const double g2 = grad.squaredNorm();
    double step = cfg.step_size;
    ParamVector trial = w;
    double trial_obj = obj;
    for (int ls = 0; ls < 60; ++ls) {
      trial.weights = w.weights - step * grad.head(d);
      trial.bias = w.bias - step * grad[d];
      trial_obj = logistic_objective(trial, batch, cfg.l2_reg);
      if (trial_obj <= obj - kArmijo * step * g2) {
        break;
      }
      step *= kShrink;
    }
    if (trial_obj >= obj) {
      break;  // no descent at the smallest step: numerically converged
    }
    w = trial;
    obj = trial_obj;
  }
  return w;
}

Eigen::VectorXd predict_proba(const ParamVector& w,
                              const Eigen::MatrixXd& features) {
  const Eigen::VectorXd z = margins(w, features);
  Eigen::VectorXd p(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    p[i] = std::clamp(sigmoid(z[i]), kProbLo, kProbHi);
  }
  return p;
}

double kpi_accuracy(const ParamVector& w, const MiniBatch& batch) {
  if (batch.size() == 0) {
    throw EmptyBatch("kpi_accuracy: empty batch");
  }
  const Eigen::VectorXd p = predict_proba(w, batch.features);
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < batch.size(); ++i) {
    const int pred = p[i] >= 0.5 ? 1 : 0;
    correct += pred == batch.labels[i];
  }
  return static_cast<double>(correct) / static_cast<double>(batch.size());
}

double kpi_logloss(const ParamVector& w, const MiniBatch& batch) {
  if (batch.size() == 0) {
    throw EmptyBatch("kpi_logloss: empty batch");
  }
  const Eigen::VectorXd p = predict_proba(w, batch.features);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < batch.size(); ++i) {
    const double pi = std::clamp(p[i], kLossClamp, 1.0 - kLossClamp);
    loss -= batch.labels[i] == 1 ? std::log(pi) : std::log(1.0 - pi);
  }
  return loss / static_cast<double>(batch.size());
}

}  // namespace olcwa
