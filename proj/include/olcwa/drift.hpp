#ifndef OLCWA_DRIFT_HPP_
#define OLCWA_DRIFT_HPP_

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "olcwa/errors.hpp"

namespace olcwa {

enum class KpiOrientation {
  HigherIsBetter,  // e.g. accuracy: monitor the lower tail
  LowerIsBetter,   // e.g. loss: monitor the upper tail
};

/// Sizing policy for a KPI window. With auto_size the capacity is
/// clamp(round((stream_points / batch_size) * gamma), lb, ub); otherwise
/// the fixed capacity is used as-is.
struct KpiWindowParams {
  std::size_t capacity = 31;
  bool auto_size = false;
  double gamma = 0.05;
  std::size_t lb = 8;
  std::size_t ub = 64;

  std::size_t resolve(std::size_t stream_points, std::size_t batch_size) const;
};

/// Bounded FIFO of per-batch KPI readings plus the calibration parameters
/// used to judge the newest one.
class KpiWindow {
 public:
  KpiWindow(std::size_t capacity, KpiOrientation orientation, double zeta,
            double rho);

  void push(double reading);     // evicts the oldest reading when full
  void remove_newest();          // drops a reading contaminated by drift

  bool full() const { return readings_.size() == capacity_; }
  std::size_t size() const { return readings_.size(); }
  std::size_t capacity() const { return capacity_; }
  double newest() const;
  const std::deque<double>& readings() const { return readings_; }

  KpiOrientation orientation() const { return orientation_; }
  double zeta() const { return zeta_; }
  double rho() const { return rho_; }

 private:
  std::deque<double> readings_;
  std::size_t capacity_;
  KpiOrientation orientation_;
  double zeta_;
  double rho_;
};

/// Baseline statistics and detection limits derived from a window.
/// low/high sit tau beyond the safe-band edges: low = mu - zeta - tau,
/// high = mu + zeta + tau.
struct Calibration {
  double mu = 0.0;
  double sigma = 0.0;  // population convention
  double z = 0.0;      // Phi^-1(1 - rho)
  double tau = 0.0;    // z * sigma, floored at 0
  double low = 0.0;
  double high = 0.0;
};

struct DriftVerdict {
  enum class Kind { Stable, Improvement, Incremental, Abrupt };

  Kind kind = Kind::Stable;
  double dm = 0.0;  // orientation-adjusted deviation; meaningful for drift kinds

  bool is_drift() const {
    return kind == Kind::Incremental || kind == Kind::Abrupt;
  }
  static DriftVerdict stable() { return {Kind::Stable, 0.0}; }
  static DriftVerdict improvement() { return {Kind::Improvement, 0.0}; }
  static DriftVerdict incremental(double dm) { return {Kind::Incremental, dm}; }
  static DriftVerdict abrupt(double dm) { return {Kind::Abrupt, dm}; }
};

const char* to_string(DriftVerdict::Kind kind);

/// Monotone lookup from drift magnitude to the retuned smoothing factor.
/// Bins cover dm in (zeta, zeta + tau]; anything beyond maps to alpha_abrupt.
struct ScaleMap {
  struct Bin {
    double dm_upper;
    double alpha;
  };
  std::vector<Bin> bins;
  double alpha_abrupt = 1.0;
};

/// Standard normal quantile. Rational approximation refined by one Halley
/// step; |Phi(result) - q| <= 1e-9. Throws OutOfDomain outside (0, 1).
double inv_norm_cdf(double q);

/// Standard normal CDF (erf-based); the independent half of the quantile
/// round trip.
double norm_cdf(double z);

/// Baseline statistics over the window EXCLUDING the newest reading (the
/// candidate under test), plus the CFAR limits. Requires at least two
/// baseline readings.
Calibration calibrate(const KpiWindow& window);

/// Orientation-adjusted deviation dm of `current` from cal.mu, mapped to
/// Stable / Improvement / Incremental / Abrupt.
DriftVerdict classify(const Calibration& cal, double current,
                      KpiOrientation orientation, double zeta);

/// n_bins equal-width bins over (zeta, zeta + tau]; bin j maps to
/// 0.55 + 0.40 * j / n_bins, with alpha_abrupt = 1 beyond the outer limit.
ScaleMap build_scale_map(const Calibration& cal, double zeta, int n_bins);

/// Bin lookup for Incremental, alpha_abrupt for Abrupt; NotDrifting otherwise.
double tune_alpha(const ScaleMap& map, const DriftVerdict& verdict);

/// Majority vote by severity (Abrupt > Incremental > Stable/Improvement);
/// ties break toward the less severe class. Drift results carry the median
/// dm of the agreeing voters.
DriftVerdict vote(const std::vector<DriftVerdict>& verdicts);

}  // namespace olcwa

#endif  // OLCWA_DRIFT_HPP_
