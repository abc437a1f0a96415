#include "olcwa/drift.hpp"

#include <algorithm>
#include <cmath>

namespace olcwa {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;

// Acklam's rational approximation to the standard normal quantile,
// accurate to ~1.15e-9 before refinement.
double acklam(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

int severity(DriftVerdict::Kind kind) {
  switch (kind) {
    case DriftVerdict::Kind::Abrupt: return 2;
    case DriftVerdict::Kind::Incremental: return 1;
    default: return 0;
  }
}

}  // namespace

const char* to_string(DriftVerdict::Kind kind) {
  switch (kind) {
    case DriftVerdict::Kind::Stable: return "stable";
    case DriftVerdict::Kind::Improvement: return "improvement";
    case DriftVerdict::Kind::Incremental: return "incremental";
    case DriftVerdict::Kind::Abrupt: return "abrupt";
  }
  return "?";
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double inv_norm_cdf(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw OutOfDomain("inv_norm_cdf: q = " + std::to_string(q) +
                      " outside (0,1)");
  }
  double x = acklam(q);
  // One Halley step against the erf-based CDF.
  const double e = norm_cdf(x) - q;
  const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

std::size_t KpiWindowParams::resolve(std::size_t stream_points,
                                     std::size_t batch_size) const {
  if (!auto_size) {
    return capacity;
  }
  if (batch_size == 0) {
    throw ConfigError("KpiWindowParams: batch_size must be positive");
  }
  const double raw =
      std::round(static_cast<double>(stream_points) /
                 static_cast<double>(batch_size) * gamma);
  const auto sized = static_cast<std::size_t>(std::max(raw, 0.0));
  return std::clamp(sized, lb, ub);
}

KpiWindow::KpiWindow(std::size_t capacity, KpiOrientation orientation,
                     double zeta, double rho)
    : capacity_(capacity), orientation_(orientation), zeta_(zeta), rho_(rho) {
  if (capacity_ < 3) {
    throw ConfigError("KpiWindow: capacity must be >= 3 (two baseline "
                      "readings plus the candidate)");
  }
  if (zeta_ < 0.0 || !(rho_ > 0.0) || !(rho_ < 1.0)) {
    throw ConfigError("KpiWindow: need zeta >= 0 and rho in (0,1)");
  }
}

void KpiWindow::push(double reading) {
  if (!std::isfinite(reading)) {
    throw Error("KpiWindow: non-finite reading");
  }
  if (readings_.size() == capacity_) {
    readings_.pop_front();
  }
  readings_.push_back(reading);
}

void KpiWindow::remove_newest() {
  if (readings_.empty()) {
    throw EmptyInput("KpiWindow: nothing to remove");
  }
  readings_.pop_back();
}

double KpiWindow::newest() const {
  if (readings_.empty()) {
    throw EmptyInput("KpiWindow: empty");
  }
  return readings_.back();
}

Calibration calibrate(const KpiWindow& window) {
  // The newest entry is the candidate under test; baseline statistics come
  // from everything before it.
  if (window.size() < 3) {
    throw InsufficientHistory("calibrate: need >= 2 baseline readings, have " +
                              std::to_string(window.size() == 0
                                                 ? 0
                                                 : window.size() - 1));
  }
  const auto& r = window.readings();
  const std::size_t n = r.size() - 1;
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean += r[i];
  }
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = r[i] - mean;
    var += d * d;
  }
  var /= static_cast<double>(n);

  Calibration cal;
  cal.mu = mean;
  cal.sigma = std::sqrt(var);
  cal.z = inv_norm_cdf(1.0 - window.rho());
  cal.tau = std::max(0.0, cal.z * cal.sigma);
  cal.low = cal.mu - window.zeta() - cal.tau;
  cal.high = cal.mu + window.zeta() + cal.tau;
  return cal;
}

DriftVerdict classify(const Calibration& cal, double current,
                      KpiOrientation orientation, double zeta) {
  const double dm = orientation == KpiOrientation::HigherIsBetter
                        ? cal.mu - current
                        : current - cal.mu;
  if (dm < -zeta) {
    return DriftVerdict::improvement();
  }
  if (dm <= zeta) {
    return DriftVerdict::stable();
  }
  if (dm <= zeta + cal.tau) {
    return DriftVerdict::incremental(dm);
  }
  return DriftVerdict::abrupt(dm);
}

ScaleMap build_scale_map(const Calibration& cal, double zeta, int n_bins) {
  if (n_bins < 1) {
    throw ConfigError("build_scale_map: n_bins must be >= 1");
  }
  ScaleMap map;
  map.alpha_abrupt = 1.0;
  if (cal.tau <= 0.0) {
    return map;  // no incremental region; only the abrupt alpha applies
  }
  map.bins.reserve(static_cast<std::size_t>(n_bins));
  for (int j = 1; j <= n_bins; ++j) {
    const double frac = static_cast<double>(j) / static_cast<double>(n_bins);
    map.bins.push_back({zeta + frac * cal.tau, 0.55 + 0.40 * frac});
  }
  return map;
}

double tune_alpha(const ScaleMap& map, const DriftVerdict& verdict) {
  switch (verdict.kind) {
    case DriftVerdict::Kind::Abrupt:
      return map.alpha_abrupt;
    case DriftVerdict::Kind::Incremental:
      for (const auto& bin : map.bins) {
        if (verdict.dm <= bin.dm_upper) {
          return bin.alpha;
        }
      }
      return map.alpha_abrupt;
    default:
      throw NotDrifting("tune_alpha: verdict is not a drift");
  }
}

DriftVerdict vote(const std::vector<DriftVerdict>& verdicts) {
  if (verdicts.empty()) {
    throw EmptyInput("vote: no verdicts");
  }
  int counts[3] = {0, 0, 0};
  for (const auto& v : verdicts) {
    counts[severity(v.kind)]++;
  }
  // Highest count wins; ties go to the less severe class.
  int winner = 0;
  for (int s = 1; s <= 2; ++s) {
    if (counts[s] > counts[winner]) {
      winner = s;
    }
  }
  if (winner == 0) {
    for (const auto& v : verdicts) {
      if (v.kind == DriftVerdict::Kind::Stable) {
        return DriftVerdict::stable();
      }
    }
    return DriftVerdict::improvement();
  }
  std::vector<double> dms;
  for (const auto& v : verdicts) {
    if (severity(v.kind) == winner) {
      dms.push_back(v.dm);
    }
  }
  std::sort(dms.begin(), dms.end());
  const std::size_t m = dms.size();
  const double median =
      m % 2 == 1 ? dms[m / 2] : 0.5 * (dms[m / 2 - 1] + dms[m / 2]);
  return winner == 2 ? DriftVerdict::abrupt(median)
                     : DriftVerdict::incremental(median);
}

}  // namespace olcwa
