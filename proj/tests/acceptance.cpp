// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with the measured values and wall time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "olcwa/drift.hpp"
#include "olcwa/harness.hpp"

using namespace olcwa;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
  void info(const std::string& what) {
    note += (note.empty() ? "" : "; ") + what;
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) {
    s += x;
  }
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

StreamSpec binary_spec(long n, double c1x, double c1y, double spread,
                       double noise, std::uint64_t seed) {
  StreamSpec spec;
  spec.n_points = n;
  spec.d = 2;
  spec.n_classes = 2;
  spec.seed = seed;
  spec.concept_a.centroids.resize(2, 2);
  spec.concept_a.centroids << 0, 0, c1x, c1y;
  spec.concept_a.spread = spread;
  spec.concept_a.label_noise = noise;
  spec.concept_b = spec.concept_a;
  return spec;
}

LearnerSpec olcwa_learner(const std::string& name, double alpha0, double rho,
                          std::size_t window, bool tuner) {
  LearnerSpec spec;
  spec.name = name;
  spec.type = "olcwa";
  spec.olcwa.alpha0 = alpha0;
  spec.olcwa.rho = rho;
  spec.olcwa.zeta = 0.005;
  spec.olcwa.window.capacity = window;
  spec.olcwa.tuner_enabled = tuner;
  return spec;
}

LearnerSpec baseline_learner(const std::string& type) {
  LearnerSpec spec;
  spec.name = type;
  spec.type = type;
  return spec;
}

// ---------------------------------------------------------------------
// 1. Worked-example reproduction
// ---------------------------------------------------------------------
void criterion_worked_example(Outcome& out) {
  KpiWindow window(31, KpiOrientation::HigherIsBetter, 0.020, 0.01);
  for (int i = 0; i < 15; ++i) {
    window.push(0.911);
    window.push(0.931);
  }
  window.push(0.910);

  const auto start = std::chrono::steady_clock::now();
  const Calibration cal = calibrate(window);
  const auto verdict_for = [&](double reading) {
    return classify(cal, reading, KpiOrientation::HigherIsBetter, 0.020).kind;
  };
  const auto v910 = verdict_for(0.910);
  const auto v890 = verdict_for(0.890);
  const auto v870 = verdict_for(0.870);
  const auto v950 = verdict_for(0.950);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  out.require(std::abs(cal.z - 2.326) <= 0.001,
              "z = " + fmt(cal.z, 6) + " not within 2.326 +/- 0.001");
  out.require(std::abs(cal.tau - 0.0233) <= 0.0005,
              "tau = " + fmt(cal.tau, 6) + " not within 0.0233 +/- 0.0005");
  out.require(v910 == DriftVerdict::Kind::Stable, "0.910 not stable");
  out.require(v890 == DriftVerdict::Kind::Incremental,
              "0.890 not incremental");
  out.require(v870 == DriftVerdict::Kind::Abrupt, "0.870 not abrupt");
  out.require(v950 == DriftVerdict::Kind::Improvement,
              "0.950 not improvement");
  out.require(ms < 1.0, "calibrate+classify took " + fmt(ms) + " ms");
  out.info("z=" + fmt(cal.z, 5) + " tau=" + fmt(cal.tau, 4) + " " + fmt(ms, 2) +
           " ms");
}

// ---------------------------------------------------------------------
// 2. CFAR false-alarm rate
// ---------------------------------------------------------------------
void criterion_cfar(Outcome& out) {
  std::mt19937_64 rng(20240817);
  auto gauss = [&rng]() {
    const double u1 =
        (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  const int trials = 100000;
  for (const double rho : {0.01, 0.05}) {
    KpiWindow window(1001, KpiOrientation::HigherIsBetter, 0.0, rho);
    while (!window.full()) {
      window.push(0.8 + 0.05 * gauss());
    }
    int abrupt = 0;
    for (int i = 0; i < trials; ++i) {
      window.push(0.8 + 0.05 * gauss());
      const Calibration cal = calibrate(window);
      abrupt += classify(cal, window.newest(),
                         KpiOrientation::HigherIsBetter, 0.0)
                    .kind == DriftVerdict::Kind::Abrupt;
    }
    const double rate = static_cast<double>(abrupt) / trials;
    const double band = 3.0 * std::sqrt(rho * (1.0 - rho) / trials);
    out.require(std::abs(rate - rho) <= band,
                "rho=" + fmt(rho) + ": rate " + fmt(rate, 5) +
                    " outside +/- " + fmt(band, 3));
    out.info("rho=" + fmt(rho) + " rate=" + fmt(rate, 4));
  }
}

// ---------------------------------------------------------------------
// 3. Stationary parity against the batch fit (5-fold)
// ---------------------------------------------------------------------
void criterion_stationary_parity(Outcome& out) {
  RunConfig cfg;
  cfg.synthetic = binary_spec(1000, 4, 0, 1.0, 0.10, 1);
  cfg.batch_size = 100;
  cfg.folds = 5;
  cfg.seeds = {1, 2, 3, 4, 5};
  cfg.learners = {olcwa_learner("olcwa", 0.15, 0.01, 8, true)};
  const auto rows = run_kfold(cfg);
  const double batch_acc = rows[0].mean_accuracy;
  const double olcwa_acc = rows[1].mean_accuracy;
  out.require(olcwa_acc >= batch_acc - 0.03,
              "olcwa " + fmt(olcwa_acc) + " below batch " + fmt(batch_acc) +
                  " - 0.03");
  out.info("batch=" + fmt(batch_acc) + " olcwa=" + fmt(olcwa_acc));
}

// ---------------------------------------------------------------------
// 4. Abrupt-drift recovery on a DS15-style stream
// ---------------------------------------------------------------------
StreamSpec ds15_spec() {
  StreamSpec spec = binary_spec(1000, 3, 3, 0.8, 0.10, 1);
  spec.schedule = DriftSchedule::abrupt(500);
  spec.concept_b = spec.concept_a;
  spec.concept_b.centroids << 3, 3, 0, 0;  // label flip
  return spec;
}

void criterion_abrupt_recovery(Outcome& out) {
  RunConfig cfg;
  cfg.synthetic = ds15_spec();
  cfg.batch_size = 50;
  cfg.seeds = {1, 2, 3, 4, 5};
  cfg.learners = {olcwa_learner("olcwa", 0.5, 0.01, 8, true),
                  olcwa_learner("fixed", 0.5, 0.01, 8, false),
                  baseline_learner("onb"), baseline_learner("pla")};
  const auto result = run_prequential(cfg);

  const long drift_batch = 500 / 50;
  int seeds_detected = 0;
  std::map<std::string, std::vector<double>> post_drift;
  for (const std::uint64_t seed : cfg.seeds) {
    bool detected = false;
    for (const auto& r : result.records) {
      if (r.seed != seed) {
        continue;
      }
      if (r.learner == "olcwa" && r.verdict == "abrupt" &&
          r.t >= drift_batch && r.t <= drift_batch + 1) {
        detected = true;
      }
      if (r.t >= drift_batch) {
        post_drift[r.learner + "/" + std::to_string(seed)].push_back(
            r.kpi_acc);
      }
    }
    seeds_detected += detected;
  }
  auto post_mean = [&](const std::string& learner) {
    std::vector<double> per_seed;
    for (const std::uint64_t seed : cfg.seeds) {
      per_seed.push_back(
          mean_of(post_drift[learner + "/" + std::to_string(seed)]));
    }
    return mean_of(per_seed);
  };
  const double olcwa_post = post_mean("olcwa");
  const double fixed_post = post_mean("fixed");
  const double onb_post = post_mean("onb");
  const double pla_post = post_mean("pla");

  out.require(seeds_detected >= 4, "abrupt detected within two batches in " +
                                       std::to_string(seeds_detected) +
                                       "/5 seeds");
  out.require(olcwa_post >= fixed_post + 0.05,
              "tuned " + fmt(olcwa_post) + " vs fixed-alpha " +
                  fmt(fixed_post) + " gap < 0.05");
  out.require(olcwa_post > onb_post,
              "tuned " + fmt(olcwa_post) + " <= onb " + fmt(onb_post));
  out.require(olcwa_post > pla_post,
              "tuned " + fmt(olcwa_post) + " <= pla " + fmt(pla_post));
  out.info("post-drift acc: olcwa=" + fmt(olcwa_post) + " fixed=" +
           fmt(fixed_post) + " onb=" + fmt(onb_post) + " pla=" +
           fmt(pla_post) + " detected=" + std::to_string(seeds_detected) +
           "/5");
}

// ---------------------------------------------------------------------
// 5. Incremental-drift tracking on a DS19-style stream
// ---------------------------------------------------------------------
StreamSpec ds19_spec() {
  // both centroids translate along x while the separation vector swings
  // 45 degrees; each scheduled move shifts the concept by a half-spread
  StreamSpec spec = binary_spec(2800, 3, 0, 0.8, 0.05, 1);
  spec.schedule = DriftSchedule::incremental(200, 600, 2200);
  spec.concept_b = spec.concept_a;
  spec.concept_b.centroids << 4.5, 0, 6.62, 2.12;
  return spec;
}

void criterion_incremental_tracking(Outcome& out) {
  RunConfig cfg;
  cfg.synthetic = ds19_spec();
  cfg.batch_size = 50;
  cfg.seeds = {1, 2, 3, 4, 5};
  cfg.learners = {olcwa_learner("olcwa", 0.15, 0.01, 12, true),
                  olcwa_learner("fixed", 0.15, 0.01, 12, false)};
  const auto result = run_prequential(cfg);

  // drift windows: one per scheduled move, four batches each
  std::vector<std::pair<long, long>> windows;
  for (long at = 600; at <= 2200; at += 200) {
    windows.push_back({at / 50, at / 50 + 4});
  }
  int seeds_tracking = 0;
  std::vector<double> tuned_acc, fixed_acc;
  for (const std::uint64_t seed : cfg.seeds) {
    std::set<long> incremental_at;
    std::vector<double> tuned_seed, fixed_seed;
    for (const auto& r : result.records) {
      if (r.seed != seed) {
        continue;
      }
      if (r.learner == "olcwa") {
        tuned_seed.push_back(r.kpi_acc);
        if (r.verdict == "incremental") {
          incremental_at.insert(r.t);
        }
      } else {
        fixed_seed.push_back(r.kpi_acc);
      }
    }
    bool all_windows = true;
    for (const auto& [lo, hi] : windows) {
      bool hit = false;
      for (long t = lo; t < hi; ++t) {
        hit = hit || incremental_at.count(t) > 0;
      }
      all_windows = all_windows && hit;
    }
    seeds_tracking += all_windows;
    tuned_acc.push_back(mean_of(tuned_seed));
    fixed_acc.push_back(mean_of(fixed_seed));
  }
  const double tuned_mean = mean_of(tuned_acc);
  const double fixed_mean = mean_of(fixed_acc);
  out.require(seeds_tracking >= 4,
              "incremental verdict in every drift window for " +
                  std::to_string(seeds_tracking) + "/5 seeds");
  out.require(tuned_mean >= fixed_mean,
              "tuned " + fmt(tuned_mean) + " below fixed " + fmt(fixed_mean));
  out.info("tracking seeds=" + std::to_string(seeds_tracking) + "/5 tuned=" +
           fmt(tuned_mean) + " fixed=" + fmt(fixed_mean));
}

// ---------------------------------------------------------------------
// 6. EWMA convergence on a constant concept
// ---------------------------------------------------------------------
void criterion_ewma_convergence(Outcome& out) {
  const StreamSpec init_spec = binary_spec(200, 1.6, 0, 1.0, 0.0, 11);
  const StreamSpec inc_spec = binary_spec(200, 1.0, 1.25, 1.0, 0.0, 12);
  const Stream init_stream = generate(init_spec);
  const Stream inc_stream = generate(inc_spec);
  const MiniBatch init_batch(init_stream.features, init_stream.labels);
  const MiniBatch fixed_batch(inc_stream.features, inc_stream.labels);

  for (const double alpha : {0.25, 0.5, 0.9}) {
    OlcwaConfig cfg;
    cfg.alpha0 = alpha;
    cfg.tuner_enabled = false;
    cfg.window.capacity = 5;
    cfg.solver.grad_tol = 1e-10;
    cfg.solver.max_iters = 5000;
    cfg.solver.l2_reg = 1e-3;
    OlcwaModel model(init_batch, cfg);
    const Eigen::VectorXd target =
        fit_logistic(fixed_batch, cfg.solver).weights.normalized();

    auto angle = [&]() {
      const double c = model.base().weights.normalized().dot(target);
      return std::acos(std::clamp(c, -1.0, 1.0));
    };
    double prev = angle();
    bool monotone = true;
    bool reached = false;
    int steps = 0;
    std::vector<double> ratios;
    for (int t = 0; t < 200 && !reached; ++t) {
      model.step(fixed_batch);
      const double cur = angle();
      reached = cur < 1e-6;
      steps = t + 1;
      if (!reached && cur > prev + 1e-11) {
        monotone = false;
      }
      if (cur > 1e-5 && cur < 1e-3 && prev < 0.1) {
        ratios.push_back(cur / prev);
      }
      prev = cur;
    }
    out.require(monotone, "alpha=" + fmt(alpha) + ": angle not monotone");
    out.require(reached, "alpha=" + fmt(alpha) + ": angle " + fmt(prev, 3) +
                             " after 200 steps");
    out.require(!ratios.empty(), "alpha=" + fmt(alpha) + ": no small-angle "
                                 "ratio samples");
    for (const double r : ratios) {
      out.require(std::abs(r - (1.0 - alpha)) <= 0.05 * (1.0 - alpha),
                  "alpha=" + fmt(alpha) + ": contraction " + fmt(r, 4) +
                      " not within 5% of " + fmt(1.0 - alpha));
    }
    out.info("alpha=" + fmt(alpha) + " steps=" + std::to_string(steps));
  }
}

// ---------------------------------------------------------------------
// 7. Regret sublinearity proxy
// ---------------------------------------------------------------------
void criterion_regret(Outcome& out) {
  // centroid gap 1 with unit spread puts the optimal logistic weights at
  // unit norm, the scale the blended direction lives on
  RunConfig cfg;
  cfg.synthetic = binary_spec(2001 * 25, 1.0, 0, 1.0, 0.0, 1);
  cfg.batch_size = 25;
  cfg.seeds = {1};
  cfg.learners = {olcwa_learner("olcwa", 0.02, 0.01, 8, false)};
  const auto result = run_prequential(cfg);

  double r200 = 0.0, r2000 = 0.0;
  for (const auto& rec : result.records) {
    if (rec.t == 200) {
      r200 = rec.cum_regret;
    }
    if (rec.t == 2000) {
      r2000 = rec.cum_regret;
    }
  }
  const double avg200 = r200 / 200.0;
  const double avg2000 = r2000 / 2000.0;
  out.require(r200 > 0.0, "R_200 = " + fmt(r200) + " not positive");
  out.require(avg2000 <= 0.5 * avg200,
              "R_T/T " + fmt(avg2000, 5) + " at T=2000 vs " + fmt(avg200, 5) +
                  " at T=200");
  out.info("R200/200=" + fmt(avg200, 4) + " R2000/2000=" + fmt(avg2000, 4));
}

// ---------------------------------------------------------------------
// 8. Geometry suite across dimensions
// ---------------------------------------------------------------------
void criterion_geometry(Outcome& out) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const int d : {2, 3, 20, 200}) {
    double worst_residual = 0.0;
    double worst_containment = 0.0;
    int intersecting = 0;
    for (int rep = 0; rep < 1000; ++rep) {
      Eigen::VectorXd v1(d), v2(d);
      for (int i = 0; i < d; ++i) {
        v1[i] = g(rng);
        v2[i] = g(rng);
      }
      const ParamVector w1(v1.normalized(), u(rng));
      const ParamVector w2(v2.normalized(), u(rng));
      const auto rel = relate_planes(w1, w2);
      if (rel.kind != PlaneRelation::Kind::Intersecting) {
        continue;
      }
      ++intersecting;
      const auto& p = rel.point->coords;
      worst_residual = std::max(
          worst_residual, std::abs(w1.weights.dot(p) + w1.bias));
      worst_residual = std::max(
          worst_residual, std::abs(w2.weights.dot(p) + w2.bias));
      const Eigen::VectorXd v_avg =
          blend_directions(w1.weights, w2.weights, 0.5);
      const ParamVector blended = define_hyperplane(v_avg, *rel.point);
      worst_containment = std::max(
          worst_containment,
          std::abs(blended.weights.dot(p) + blended.bias) /
              (1e-300 + v_avg.norm() * p.norm()));
    }
    out.require(intersecting == 1000,
                "d=" + std::to_string(d) + ": only " +
                    std::to_string(intersecting) + " intersecting pairs");
    out.require(worst_residual <= 1e-9, "d=" + std::to_string(d) +
                                            ": residual " +
                                            fmt(worst_residual, 3));
    out.require(worst_containment <= 1e-12,
                "d=" + std::to_string(d) + ": containment " +
                    fmt(worst_containment, 3));
  }

  // parallel fallback: alpha = 0.5 gives the geometric midpoint
  double worst_mid = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    Eigen::VectorXd v(5);
    for (int i = 0; i < 5; ++i) {
      v[i] = g(rng);
    }
    v.normalize();
    const double b1 = u(rng), b2 = u(rng);
    const ParamVector w1(v, b1), w2(v, b2);
    const Point anchor = fallback_anchor(w1, w2, 0.5);
    const Eigen::VectorXd mid = -0.5 * (b1 + b2) * v;
    worst_mid = std::max(worst_mid, (anchor.coords - mid).norm());
  }
  out.require(worst_mid <= 1e-12, "parallel midpoint error " + fmt(worst_mid, 3));
  out.info("midpoint err=" + fmt(worst_mid, 2));
}

// ---------------------------------------------------------------------
// 9. Gradient and solver-oracle checks
// ---------------------------------------------------------------------
ParamVector irls_fit(const MiniBatch& batch, double l2) {
  const Eigen::Index n = batch.size();
  const Eigen::Index d = batch.dim();
  Eigen::MatrixXd xa(n, d + 1);
  xa.leftCols(d) = batch.features;
  xa.col(d).setOnes();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d + 1);
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd z = xa * w;
    Eigen::VectorXd p(n), s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = sigmoid(z[i]);
      s[i] = std::max(p[i] * (1.0 - p[i]), 1e-12);
    }
    Eigen::VectorXd resid(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      resid[i] = p[i] - static_cast<double>(batch.labels[i]);
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    const Eigen::VectorXd grad = inv_n * (xa.transpose() * resid) + l2 * w;
    Eigen::MatrixXd hess =
        inv_n * (xa.transpose() * s.asDiagonal() * xa) +
        l2 * Eigen::MatrixXd::Identity(d + 1, d + 1);
    const Eigen::VectorXd step = hess.ldlt().solve(grad);
    w -= step;
    if (step.lpNorm<Eigen::Infinity>() < 1e-14) {
      break;
    }
  }
  return ParamVector(w.head(d), w[d]);
}

void criterion_solver_oracles(Outcome& out) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  double worst_grad = 0.0;
  double worst_cos = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::MatrixXd x(30, 3);
    Eigen::VectorXi y(30);
    for (int i = 0; i < 30; ++i) {
      y[i] = i % 2;
      for (int j = 0; j < 3; ++j) {
        x(i, j) = g(rng) + (y[i] == 1 && j == 0 ? 2.0 : 0.0);
      }
    }
    const MiniBatch batch(x, y);

    // gradient vs central differences at a random point
    Eigen::VectorXd wv(3);
    wv << g(rng), g(rng), g(rng);
    const ParamVector w0(wv, g(rng));
    const double l2 = 1e-2;
    const Eigen::VectorXd grad = logistic_gradient(w0, batch, l2);
    for (int j = 0; j <= 3; ++j) {
      ParamVector lo = w0, hi = w0;
      const double h = 1e-6;
      if (j < 3) {
        lo.weights[j] -= h;
        hi.weights[j] += h;
      } else {
        lo.bias -= h;
        hi.bias += h;
      }
      const double fd = (logistic_objective(hi, batch, l2) -
                         logistic_objective(lo, batch, l2)) /
                        (2.0 * h);
      worst_grad = std::max(
          worst_grad, std::abs(grad[j] - fd) / (1.0 + std::abs(grad[j])));
    }

    SolverConfig cfg;
    cfg.l2_reg = l2;
    cfg.grad_tol = 1e-10;
    cfg.max_iters = 5000;
    const ParamVector fitted = fit_logistic(batch, cfg);
    const ParamVector oracle = irls_fit(batch, l2);
    const double cosine =
        fitted.weights.normalized().dot(oracle.weights.normalized());
    worst_cos = std::max(worst_cos, 1.0 - cosine);
  }
  out.require(worst_grad <= 1e-5, "gradient mismatch " + fmt(worst_grad, 3));
  out.require(worst_cos <= 1e-3, "direction cosine gap " + fmt(worst_cos, 3));
  out.info("grad err=" + fmt(worst_grad, 2) + " cos gap=" + fmt(worst_cos, 2));
}

// ---------------------------------------------------------------------
// 10. Multiclass one-vs-rest parity and argmax exactness
// ---------------------------------------------------------------------
void criterion_multiclass(Outcome& out) {
  StreamSpec spec;
  spec.n_points = 1000;
  spec.d = 5;
  spec.n_classes = 3;
  spec.seed = 1;
  spec.concept_a.centroids.resize(3, 5);
  spec.concept_a.centroids << 0, 0, 0, 0, 0,
                              4.5, 0, 0, 0, 0,
                              2.25, 3.9, 0, 0, 0;
  spec.concept_a.spread = 1.0;
  spec.concept_a.label_noise = 0.10;
  spec.concept_b = spec.concept_a;

  RunConfig cfg;
  cfg.synthetic = spec;
  cfg.batch_size = 200;
  cfg.folds = 5;
  cfg.seeds = {1, 2, 3, 4, 5};
  cfg.learners = {olcwa_learner("olcwa", 0.15, 0.01, 8, true)};
  const auto rows = run_kfold(cfg);
  const double batch_acc = rows[0].mean_accuracy;
  const double olcwa_acc = rows[1].mean_accuracy;
  out.require(olcwa_acc >= batch_acc - 0.03,
              "ovr olcwa " + fmt(olcwa_acc) + " below batch " +
                  fmt(batch_acc) + " - 0.03");

  // argmax prediction equals brute-force per-class maximization exactly
  const Stream stream = generate(spec);
  const auto batches = batch_iter_multiclass(stream, 100);
  OlcwaConfig mcfg;
  mcfg.window.capacity = 8;
  OvrModel model(batches[0], 3, mcfg);
  model.step(batches[1]);
  const Eigen::MatrixXd probs = model.predict_proba(stream.features);
  const Eigen::VectorXi pred = model.predict(stream.features);
  bool exact = true;
  for (Eigen::Index i = 0; i < pred.size(); ++i) {
    int best = 0;
    for (int k = 1; k < 3; ++k) {
      if (probs(i, k) > probs(i, best)) {
        best = k;
      }
    }
    exact = exact && pred[i] == best + 1;
  }
  out.require(exact, "argmax mismatch against brute-force maximization");
  out.info("batch=" + fmt(batch_acc) + " ovr=" + fmt(olcwa_acc));
}

// ---------------------------------------------------------------------
// 11. Linear scaling with dimension
// ---------------------------------------------------------------------
StreamSpec high_dim_spec(Eigen::Index d) {
  StreamSpec spec;
  spec.n_points = 4000;
  spec.d = d;
  spec.n_classes = 2;
  spec.seed = 1;
  spec.concept_a.centroids = Eigen::MatrixXd::Zero(2, d);
  spec.concept_a.centroids(1, 0) = 3.0;
  spec.concept_a.spread = 1.0;
  spec.concept_a.label_noise = 0.05;
  spec.concept_b = spec.concept_a;
  return spec;
}

void criterion_complexity(Outcome& out) {
  auto per_batch_seconds = [](Eigen::Index d) {
    RunConfig cfg;
    cfg.synthetic = high_dim_spec(d);
    cfg.batch_size = 50;
    cfg.seeds = {1};
    cfg.learners = {olcwa_learner("olcwa", 0.5, 0.01, 8, true)};
    const auto rows = measure_runtime(cfg, 3);
    const double batches = 4000.0 / 50.0;
    return rows[0].seconds / batches;
  };
  const double t20 = per_batch_seconds(20);
  const double t200 = per_batch_seconds(200);
  out.require(t200 <= 30.0 * t20, "t(d=200)/t(d=20) = " + fmt(t200 / t20, 3));
  out.info("per-batch: d20=" + fmt(t20 * 1e3, 3) + "ms d200=" +
           fmt(t200 * 1e3, 3) + "ms ratio=" + fmt(t200 / t20, 3));
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<void(Outcome&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example calibration and verdicts", 5.0,
       criterion_worked_example},
      {2, "CFAR false-alarm rate", 5.0, criterion_cfar},
      {3, "stationary 5-fold parity with the batch fit", 30.0,
       criterion_stationary_parity},
      {4, "abrupt-drift detection and recovery", 60.0,
       criterion_abrupt_recovery},
      {5, "incremental-drift tracking", 60.0, criterion_incremental_tracking},
      {6, "weighted-average direction convergence", 5.0,
       criterion_ewma_convergence},
      {7, "regret sublinearity proxy", 60.0, criterion_regret},
      {8, "hyperplane geometry across dimensions", 10.0, criterion_geometry},
      {9, "solver gradient and IRLS oracle agreement", 10.0,
       criterion_solver_oracles},
      {10, "one-vs-rest multiclass parity and argmax", 30.0,
       criterion_multiclass},
      {11, "linear runtime scaling in dimension", 60.0,
       criterion_complexity},
  };

  int passed = 0;
  for (const auto& criterion : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.fn(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    out.require(seconds < criterion.budget_seconds,
                "took " + fmt(seconds, 3) + " s (budget " +
                    fmt(criterion.budget_seconds, 3) + " s)");
    std::printf("[%2d] %s  %-45s (%.2fs)%s%s\n", criterion.id,
                out.ok ? "PASS" : "FAIL", criterion.label, seconds,
                out.note.empty() ? "" : "  -- ", out.note.c_str());
    passed += out.ok;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
