#ifndef OLCWA_SOLVER_HPP_
#define OLCWA_SOLVER_HPP_

#include <Eigen/Dense>
#include <optional>

#include "olcwa/geometry.hpp"

namespace olcwa {

/// One stream increment: n x d features with binary {0,1} labels.
struct MiniBatch {
  Eigen::MatrixXd features;  // n x d
  Eigen::VectorXi labels;    // n entries in {0,1}

  MiniBatch() = default;
  MiniBatch(Eigen::MatrixXd x, Eigen::VectorXi y);

  Eigen::Index size() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }
};

struct SolverConfig {
  int max_iters = 200;
  double step_size = 1.0;  // initial backtracking step
  double grad_tol = 1e-6;  // on ||grad||_inf
  double l2_reg = 1e-4;

  void validate() const;
};

/// L2-regularized logistic fit by full-batch gradient descent with Armijo
/// backtracking. Deterministic; optionally warm-started. Throws
/// DegenerateBatch for a single-class batch with l2_reg == 0 (the optimum
/// is unbounded there).
ParamVector fit_logistic(const MiniBatch& batch, const SolverConfig& cfg = {},
                         const std::optional<ParamVector>& warm_start = {});

/// sigma(V.x + b) per row, clamped to the open interval (0, 1).
Eigen::VectorXd predict_proba(const ParamVector& w,
                              const Eigen::MatrixXd& features);

/// Mean NLL objective fit_logistic minimizes, plus its gradient. Exposed
/// for finite-difference checks.
double logistic_objective(const ParamVector& w, const MiniBatch& batch,
                          double l2_reg);
Eigen::VectorXd logistic_gradient(const ParamVector& w, const MiniBatch& batch,
                                  double l2_reg);

/// Fraction of rows with 1[p >= 0.5] == label.
double kpi_accuracy(const ParamVector& w, const MiniBatch& batch);

/// Mean cross-entropy with probabilities clamped to [1e-15, 1 - 1e-15].
double kpi_logloss(const ParamVector& w, const MiniBatch& batch);

double sigmoid(double z);

}  // namespace olcwa

#endif  // OLCWA_SOLVER_HPP_
