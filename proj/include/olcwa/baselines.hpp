#ifndef OLCWA_BASELINES_HPP_
#define OLCWA_BASELINES_HPP_

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "olcwa/errors.hpp"

namespace olcwa {

enum class BaselineKind { PLA, LMS, OLR, ONB, PA };

BaselineKind baseline_kind_from_string(const std::string& name);
const char* to_string(BaselineKind kind);

struct BaselineConfig {
  BaselineKind kind = BaselineKind::PLA;
  double learning_rate = 0.1;   // lambda, LMS/OLR
  double aggressiveness = 1.0;  // C, PA-I
  double variance_floor = 1e-9; // ONB

  void validate() const;
};

/// Per-sample online binary classifier.
class BaselineModel {
 public:
  virtual ~BaselineModel() = default;

  virtual void update(const Eigen::VectorXd& x, int y) = 0;
  virtual int predict(const Eigen::VectorXd& x) const = 0;

  /// Probability of class 1; only OLR and ONB define one.
  virtual bool has_proba() const { return false; }
  virtual double predict_proba(const Eigen::VectorXd& x) const;

  virtual BaselineKind kind() const = 0;
};

std::unique_ptr<BaselineModel> baseline_init(BaselineKind kind, Eigen::Index d,
                                             const BaselineConfig& cfg = {});

}  // namespace olcwa

#endif  // OLCWA_BASELINES_HPP_
