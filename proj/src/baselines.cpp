#include "olcwa/baselines.hpp"

#include <cmath>

#include "olcwa/solver.hpp"

namespace olcwa {

BaselineKind baseline_kind_from_string(const std::string& name) {
  if (name == "pla") return BaselineKind::PLA;
  if (name == "lms") return BaselineKind::LMS;
  if (name == "olr") return BaselineKind::OLR;
  if (name == "onb") return BaselineKind::ONB;
  if (name == "pa") return BaselineKind::PA;
  throw ConfigError("unknown baseline: " + name);
}

const char* to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::PLA: return "pla";
    case BaselineKind::LMS: return "lms";
    case BaselineKind::OLR: return "olr";
    case BaselineKind::ONB: return "onb";
    case BaselineKind::PA: return "pa";
  }
  return "?";
}

void BaselineConfig::validate() const {
  if (!(learning_rate > 0.0) || !(aggressiveness > 0.0) ||
      !(variance_floor > 0.0)) {
    throw ConfigError("BaselineConfig: rates and floors must be positive");
  }
}

double BaselineModel::predict_proba(const Eigen::VectorXd&) const {
  throw Error("this baseline does not define probabilities");
}

namespace {

void check_dim(Eigen::Index have, Eigen::Index want) {
  if (have != want) {
    throw DimensionMismatch("baseline: sample dim " + std::to_string(have) +
                            " vs model dim " + std::to_string(want));
  }
}

// Linear models share the weights-plus-bias state; labels map to {-1,+1}
// internally for the margin-based rules.
class LinearBaseline : public BaselineModel {
 public:
  explicit LinearBaseline(Eigen::Index d)
      : w_(Eigen::VectorXd::Zero(d)), b_(0.0) {}

  int predict(const Eigen::VectorXd& x) const override {
    check_dim(x.size(), w_.size());
    return margin(x) >= 0.0 ? 1 : 0;
  }

 protected:
  double margin(const Eigen::VectorXd& x) const { return w_.dot(x) + b_; }

  Eigen::VectorXd w_;
  double b_;
};

class Perceptron : public LinearBaseline {
 public:
  using LinearBaseline::LinearBaseline;

  void update(const Eigen::VectorXd& x, int y) override {
    check_dim(x.size(), w_.size());
    const double ys = y == 1 ? 1.0 : -1.0;
    if (ys * margin(x) <= 0.0) {  // mistake-driven
      w_ += ys * x;
      b_ += ys;
    }
  }
  BaselineKind kind() const override { return BaselineKind::PLA; }
};

class WidrowHoff : public LinearBaseline {
 public:
  WidrowHoff(Eigen::Index d, double lambda)
      : LinearBaseline(d), lambda_(lambda) {}

  void update(const Eigen::VectorXd& x, int y) override {
    check_dim(x.size(), w_.size());
    const double err = static_cast<double>(y) - margin(x);
    w_ += lambda_ * err * x;
    b_ += lambda_ * err;
  }

  int predict(const Eigen::VectorXd& x) const override {
    check_dim(x.size(), w_.size());
    return margin(x) >= 0.5 ? 1 : 0;  // regression on {0,1} targets
  }
  BaselineKind kind() const override { return BaselineKind::LMS; }

 private:
  double lambda_;
};

class OnlineLogistic : public LinearBaseline {
 public:
  OnlineLogistic(Eigen::Index d, double lambda)
      : LinearBaseline(d), lambda_(lambda) {}

  void update(const Eigen::VectorXd& x, int y) override {
    check_dim(x.size(), w_.size());
    const double err = static_cast<double>(y) - sigmoid(margin(x));
    w_ += lambda_ * err * x;
    b_ += lambda_ * err;
  }

  int predict(const Eigen::VectorXd& x) const override {
    return predict_proba(x) >= 0.5 ? 1 : 0;
  }
  bool has_proba() const override { return true; }
  double predict_proba(const Eigen::VectorXd& x) const override {
    check_dim(x.size(), w_.size());
    return sigmoid(margin(x));
  }
  BaselineKind kind() const override { return BaselineKind::OLR; }

 private:
  double lambda_;
};

class PassiveAggressive : public LinearBaseline {
 public:
  PassiveAggressive(Eigen::Index d, double c) : LinearBaseline(d), c_(c) {}

  void update(const Eigen::VectorXd& x, int y) override {
    check_dim(x.size(), w_.size());
    const double ys = y == 1 ? 1.0 : -1.0;
    const double loss = std::max(0.0, 1.0 - ys * margin(x));
    if (loss > 0.0) {
      // PA-I: step capped at C; bias handled as an implicit unit feature.
      const double step = std::min(c_, loss / (x.squaredNorm() + 1.0));
      w_ += step * ys * x;
      b_ += step * ys;
    }
  }
  BaselineKind kind() const override { return BaselineKind::PA; }

 private:
  double c_;
};

// Gaussian naive Bayes with running per-class moments (Welford updates).
class OnlineNaiveBayes : public BaselineModel {
 public:
  OnlineNaiveBayes(Eigen::Index d, double variance_floor)
      : floor_(variance_floor) {
    for (auto& cls : cls_) {
      cls.mean = Eigen::VectorXd::Zero(d);
      cls.m2 = Eigen::VectorXd::Zero(d);
      cls.count = 0;
    }
  }

  void update(const Eigen::VectorXd& x, int y) override {
    check_dim(x.size(), cls_[0].mean.size());
    auto& cls = cls_[y == 1 ? 1 : 0];
    cls.count += 1;
    const Eigen::VectorXd delta = x - cls.mean;
    cls.mean += delta / static_cast<double>(cls.count);
    cls.m2 += delta.cwiseProduct(x - cls.mean);
  }

  int predict(const Eigen::VectorXd& x) const override {
    return predict_proba(x) >= 0.5 ? 1 : 0;
  }
  bool has_proba() const override { return true; }

  double predict_proba(const Eigen::VectorXd& x) const override {
    check_dim(x.size(), cls_[0].mean.size());
    const long total = cls_[0].count + cls_[1].count;
    if (total == 0) {
      return 0.5;  // uniform prior, no evidence
    }
    // Laplace-smoothed priors keep an unseen class from zeroing out.
    const double log_joint0 = log_joint(cls_[0], x, total);
    const double log_joint1 = log_joint(cls_[1], x, total);
    const double m = std::max(log_joint0, log_joint1);
    const double e0 = std::exp(log_joint0 - m);
    const double e1 = std::exp(log_joint1 - m);
    return e1 / (e0 + e1);
  }
  BaselineKind kind() const override { return BaselineKind::ONB; }

 private:
  struct ClassStats {
    Eigen::VectorXd mean;
    Eigen::VectorXd m2;
    long count = 0;
  };

  double log_joint(const ClassStats& cls, const Eigen::VectorXd& x,
                   long total) const {
    const double prior = (static_cast<double>(cls.count) + 1.0) /
                         (static_cast<double>(total) + 2.0);
    double lj = std::log(prior);
    if (cls.count == 0) {
      return lj;  // no likelihood evidence yet
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double var =
          std::max(cls.m2[i] / static_cast<double>(cls.count), floor_);
      const double diff = x[i] - cls.mean[i];
      lj += -0.5 * (std::log(2.0 * M_PI * var) + diff * diff / var);
    }
    return lj;
  }

  ClassStats cls_[2];
  double floor_;
};

}  // namespace

std::unique_ptr<BaselineModel> baseline_init(BaselineKind kind, Eigen::Index d,
                                             const BaselineConfig& cfg) {
  cfg.validate();
  if (d < 1) {
    throw DimensionMismatch("baseline_init: need d >= 1");
  }
  switch (kind) {
    case BaselineKind::PLA:
      return std::make_unique<Perceptron>(d);
    case BaselineKind::LMS:
      return std::make_unique<WidrowHoff>(d, cfg.learning_rate);
    case BaselineKind::OLR:
      return std::make_unique<OnlineLogistic>(d, cfg.learning_rate);
    case BaselineKind::ONB:
      return std::make_unique<OnlineNaiveBayes>(d, cfg.variance_floor);
    case BaselineKind::PA:
      return std::make_unique<PassiveAggressive>(d, cfg.aggressiveness);
  }
  throw ConfigError("baseline_init: unknown kind");
}

}  // namespace olcwa
