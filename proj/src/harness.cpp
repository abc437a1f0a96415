#include "olcwa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

namespace olcwa {

namespace {

using json = nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

class OlcwaLearner : public StreamLearner {
 public:
  OlcwaLearner(std::string name, OlcwaConfig cfg)
      : StreamLearner(std::move(name)), cfg_(std::move(cfg)) {}

  void train(const MiniBatch& batch) override {
    if (!model_) {
      model_.emplace(batch, cfg_);
      return;
    }
    last_ = model_->step(batch);
  }

  Eigen::VectorXi predict(const Eigen::MatrixXd& features) const override {
    const Eigen::VectorXd p = proba(features);
    Eigen::VectorXi labels(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      labels[i] = p[i] >= 0.5 ? 1 : 0;
    }
    return labels;
  }

  bool has_proba() const override { return true; }

  Eigen::VectorXd proba(const Eigen::MatrixXd& features) const override {
    if (!model_) {
      throw Error("olcwa learner queried before the first batch");
    }
    return model_->predict(features);
  }

  const StepReport* last_report() const override {
    return last_ ? &*last_ : nullptr;
  }

 private:
  OlcwaConfig cfg_;
  std::optional<OlcwaModel> model_;
  std::optional<StepReport> last_;
};

class BaselineLearner : public StreamLearner {
 public:
  BaselineLearner(std::string name, BaselineConfig cfg)
      : StreamLearner(std::move(name)), cfg_(cfg) {}

  void train(const MiniBatch& batch) override {
    ensure(batch.dim());
    for (Eigen::Index i = 0; i < batch.size(); ++i) {
      model_->update(batch.features.row(i), batch.labels[i]);
    }
  }

  Eigen::VectorXi predict(const Eigen::MatrixXd& features) const override {
    ensure(features.cols());
    Eigen::VectorXi labels(features.rows());
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      labels[i] = model_->predict(features.row(i));
    }
    return labels;
  }

  bool has_proba() const override {
    return model_ ? model_->has_proba()
                  : cfg_.kind == BaselineKind::OLR ||
                        cfg_.kind == BaselineKind::ONB;
  }

  Eigen::VectorXd proba(const Eigen::MatrixXd& features) const override {
    ensure(features.cols());
    Eigen::VectorXd p(features.rows());
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      p[i] = model_->predict_proba(features.row(i));
    }
    return p;
  }

 private:
  // lazily sized on the first batch or query
  void ensure(Eigen::Index d) const {
    if (!model_) {
      model_ = baseline_init(cfg_.kind, d, cfg_);
    }
  }

  BaselineConfig cfg_;
  mutable std::unique_ptr<BaselineModel> model_;
};

double batch_accuracy(const Eigen::VectorXi& pred, const Eigen::VectorXi& y) {
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    correct += pred[i] == y[i];
  }
  return static_cast<double>(correct) / static_cast<double>(y.size());
}

double batch_logloss(const Eigen::VectorXd& p, const Eigen::VectorXi& y) {
  double loss = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double pi = std::clamp(p[i], 1e-15, 1.0 - 1e-15);
    loss -= y[i] == 1 ? std::log(pi) : std::log(1.0 - pi);
  }
  return loss / static_cast<double>(y.size());
}

}  // namespace

Eigen::VectorXd StreamLearner::proba(const Eigen::MatrixXd&) const {
  throw Error("learner '" + name() + "' does not define probabilities");
}

std::unique_ptr<StreamLearner> make_learner(const LearnerSpec& spec) {
  if (spec.type == "olcwa") {
    return std::make_unique<OlcwaLearner>(spec.name, spec.olcwa);
  }
  BaselineConfig cfg = spec.baseline;
  cfg.kind = baseline_kind_from_string(spec.type);
  return std::make_unique<BaselineLearner>(spec.name, cfg);
}

void RunConfig::validate() const {
  if (learners.empty()) {
    throw ConfigError("RunConfig: need at least one learner");
  }
  if (batch_size < 1) {
    throw ConfigError("RunConfig: batch_size must be >= 1");
  }
  if (seeds.empty()) {
    throw ConfigError("RunConfig: need at least one seed");
  }
  if (!synthetic && csv_path.empty()) {
    throw ConfigError("RunConfig: need a synthetic stream spec or a CSV path");
  }
  if (synthetic) {
    synthetic->validate();
  }
}

Stream RunConfig::load_stream(std::uint64_t seed) const {
  if (synthetic) {
    StreamSpec spec = *synthetic;
    spec.seed = seed;
    return generate(spec);
  }
  return import_csv(csv_path);
}

void RegretTracker::record(double online_batch_loss) {
  if (finalized_) {
    throw Error("RegretTracker: already finalized");
  }
  online_.push_back(online_batch_loss);
}

void RegretTracker::finalize(const std::vector<double>& comparator_losses) {
  if (comparator_losses.size() != online_.size()) {
    throw DimensionMismatch("RegretTracker: comparator series length " +
                            std::to_string(comparator_losses.size()) +
                            " vs online " + std::to_string(online_.size()));
  }
  curve_.resize(online_.size());
  double r = 0.0;
  for (std::size_t i = 0; i < online_.size(); ++i) {
    r += online_[i] - comparator_losses[i];
    curve_[i] = r;
  }
  finalized_ = true;
}

double RegretTracker::cumulative_online() const {
  double s = 0.0;
  for (double v : online_) {
    s += v;
  }
  return s;
}

double RegretTracker::comparator_loss() const {
  if (!finalized_) {
    throw Error("RegretTracker: not finalized");
  }
  return cumulative_online() - (curve_.empty() ? 0.0 : curve_.back());
}

const std::vector<double>& RegretTracker::curve() const {
  if (!finalized_) {
    throw Error("RegretTracker: not finalized");
  }
  return curve_;
}

std::vector<BatchRecord> drive_prequential(
    StreamLearner& learner, const std::vector<MiniBatch>& batches,
    std::uint64_t seed) {
  if (batches.empty()) {
    throw EmptyInput("drive_prequential: no batches");
  }
  std::vector<BatchRecord> records;
  records.reserve(batches.size());
  learner.train(batches[0]);
  for (std::size_t t = 1; t < batches.size(); ++t) {
    const MiniBatch& batch = batches[t];
    BatchRecord rec;
    rec.learner = learner.name();
    rec.seed = seed;
    rec.t = static_cast<long>(t);
    rec.kpi_acc = batch_accuracy(learner.predict(batch.features), batch.labels);
    rec.kpi_loss = learner.has_proba()
                       ? batch_logloss(learner.proba(batch.features), batch.labels)
                       : kNan;
    rec.alpha = kNan;
    rec.cum_regret = kNan;
    learner.train(batch);
    if (const StepReport* report = learner.last_report()) {
      rec.alpha = report->alpha_applied;
      rec.verdict = report->verdict ? to_string(report->verdict->kind)
                                    : "warmup";
    }
    records.push_back(std::move(rec));
  }
  return records;
}

ParamVector fit_hindsight(const Stream& stream) {
  if (stream.n_classes != 2) {
    throw ConfigError("fit_hindsight: binary streams only");
  }
  SolverConfig cfg;
  cfg.max_iters = 500;
  cfg.grad_tol = 1e-8;
  return fit_logistic(MiniBatch(stream.features, stream.labels), cfg);
}

PrequentialResult run_prequential(const RunConfig& cfg) {
  cfg.validate();

  struct RunOutput {
    std::vector<BatchRecord> records;
    RunSummary summary;
  };

  auto one_run = [&cfg](const LearnerSpec& spec,
                        std::uint64_t seed) -> RunOutput {
    const Stream stream = cfg.load_stream(seed);
    if (stream.n_classes != 2) {
      throw ConfigError("run_prequential: binary streams only; use kfold "
                        "for multiclass");
    }
    const std::vector<MiniBatch> batches = batch_iter(stream, cfg.batch_size);

    auto learner = make_learner(spec);
    const auto start = std::chrono::steady_clock::now();
    std::vector<BatchRecord> records =
        drive_prequential(*learner, batches, seed);
    const auto stop = std::chrono::steady_clock::now();

    // Regret against the best fixed hyperplane in hindsight, for learners
    // with a probabilistic output.
    if (learner->has_proba() && !records.empty()) {
      const ParamVector star = fit_hindsight(stream);
      RegretTracker tracker;
      std::vector<double> comparator;
      comparator.reserve(records.size());
      for (std::size_t t = 1; t < batches.size(); ++t) {
        tracker.record(records[t - 1].kpi_loss);
        comparator.push_back(kpi_logloss(star, batches[t]));
      }
      tracker.finalize(comparator);
      for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].cum_regret = tracker.curve()[i];
      }
    }

    RunSummary summary;
    summary.learner = spec.name;
    summary.seed = seed;
    summary.wall_seconds =
        std::chrono::duration<double>(stop - start).count();
    if (!records.empty()) {
      summary.final_accuracy = records.back().kpi_acc;
      double mean = 0.0;
      for (const auto& r : records) {
        mean += r.kpi_acc;
      }
      summary.mean_prequential_accuracy =
          mean / static_cast<double>(records.size());
    }
    return RunOutput{std::move(records), std::move(summary)};
  };

  // Runs are independent; execute in parallel, merge in config order.
  std::vector<std::future<RunOutput>> futures;
  futures.reserve(cfg.learners.size() * cfg.seeds.size());
  for (const auto& spec : cfg.learners) {
    for (const std::uint64_t seed : cfg.seeds) {
      futures.push_back(std::async(std::launch::async, one_run,
                                   std::cref(spec), seed));
    }
  }

  PrequentialResult result;
  for (auto& f : futures) {
    RunOutput out = f.get();
    result.summaries.push_back(std::move(out.summary));
    result.records.insert(result.records.end(),
                          std::make_move_iterator(out.records.begin()),
                          std::make_move_iterator(out.records.end()));
  }

  // seed-averaged accuracy/loss curve per learner, in config order
  for (const auto& spec : cfg.learners) {
    std::map<long, std::pair<double, long>> acc;
    std::map<long, std::pair<double, long>> loss;
    for (const auto& r : result.records) {
      if (r.learner != spec.name) {
        continue;
      }
      auto& a = acc[r.t];
      a.first += r.kpi_acc;
      a.second += 1;
      if (!std::isnan(r.kpi_loss)) {
        auto& l = loss[r.t];
        l.first += r.kpi_loss;
        l.second += 1;
      }
    }
    for (const auto& [t, sum] : acc) {
      MeanCurvePoint point;
      point.learner = spec.name;
      point.t = t;
      point.mean_kpi_acc = sum.first / static_cast<double>(sum.second);
      const auto it = loss.find(t);
      point.mean_kpi_loss =
          it == loss.end() ? kNan
                           : it->second.first /
                                 static_cast<double>(it->second.second);
      result.mean_curves.push_back(std::move(point));
    }
  }
  return result;
}

std::vector<KfoldRow> run_kfold(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.folds < 2) {
    throw ConfigError("run_kfold: need folds >= 2");
  }

  std::vector<KfoldRow> rows(cfg.learners.size() + 1);
  rows[0].learner = "batch";
  for (std::size_t i = 0; i < cfg.learners.size(); ++i) {
    rows[i + 1].learner = cfg.learners[i].name;
  }

  for (const std::uint64_t seed : cfg.seeds) {
    const Stream stream = cfg.load_stream(seed);
    if (stream.size() < cfg.folds) {
      throw ConfigError("run_kfold: more folds than samples");
    }
    const bool multiclass = stream.n_classes > 2;
    if (multiclass) {
      for (const auto& spec : cfg.learners) {
        if (spec.type != "olcwa") {
          throw ConfigError("run_kfold: multiclass streams support only "
                            "olcwa learners (one-vs-rest)");
        }
      }
    }

    // Stratified assignment: the r-th occurrence of a class lands in fold
    // r mod folds, preserving stream order inside each part.
    std::vector<int> fold_of(static_cast<std::size_t>(stream.size()));
    {
      std::vector<long> seen(static_cast<std::size_t>(stream.n_classes), 0);
      for (long i = 0; i < stream.size(); ++i) {
        auto& rank = seen[static_cast<std::size_t>(stream.labels[i])];
        fold_of[static_cast<std::size_t>(i)] =
            static_cast<int>(rank % cfg.folds);
        rank += 1;
      }
    }

    for (int fold = 0; fold < cfg.folds; ++fold) {
      std::vector<long> train_idx, test_idx;
      for (long i = 0; i < stream.size(); ++i) {
        (fold_of[static_cast<std::size_t>(i)] == fold ? test_idx : train_idx)
            .push_back(i);
      }
      Stream train, test;
      train.n_classes = test.n_classes = stream.n_classes;
      train.features.resize(static_cast<long>(train_idx.size()), stream.dim());
      train.labels.resize(static_cast<long>(train_idx.size()));
      for (std::size_t i = 0; i < train_idx.size(); ++i) {
        train.features.row(static_cast<long>(i)) =
            stream.features.row(train_idx[i]);
        train.labels[static_cast<long>(i)] = stream.labels[train_idx[i]];
      }
      test.features.resize(static_cast<long>(test_idx.size()), stream.dim());
      test.labels.resize(static_cast<long>(test_idx.size()));
      for (std::size_t i = 0; i < test_idx.size(); ++i) {
        test.features.row(static_cast<long>(i)) =
            stream.features.row(test_idx[i]);
        test.labels[static_cast<long>(i)] = stream.labels[test_idx[i]];
      }

      if (!multiclass) {
        // Full-batch reference on the training part.
        const ParamVector star = fit_hindsight(train);
        const Eigen::VectorXd p = predict_proba(star, test.features);
        Eigen::VectorXi pred(p.size());
        for (Eigen::Index i = 0; i < p.size(); ++i) {
          pred[i] = p[i] >= 0.5 ? 1 : 0;
        }
        rows[0].fold_accuracy.push_back(batch_accuracy(pred, test.labels));

        const std::vector<MiniBatch> batches =
            batch_iter(train, cfg.batch_size);
        for (std::size_t li = 0; li < cfg.learners.size(); ++li) {
          auto learner = make_learner(cfg.learners[li]);
          for (const auto& batch : batches) {
            learner->train(batch);
          }
          rows[li + 1].fold_accuracy.push_back(
              batch_accuracy(learner->predict(test.features), test.labels));
        }
      } else {
        const std::vector<MulticlassBatch> batches =
            batch_iter_multiclass(train, cfg.batch_size);
        Eigen::VectorXi test_labels_1based = test.labels;
        test_labels_1based.array() += 1;

        // One-vs-rest full-batch logistic reference.
        SolverConfig scfg;
        scfg.max_iters = 500;
        scfg.grad_tol = 1e-8;
        Eigen::VectorXi train_labels_1based = train.labels;
        train_labels_1based.array() += 1;
        MulticlassBatch full(train.features, std::move(train_labels_1based),
                             train.n_classes);
        Eigen::MatrixXd probs(test.size(), train.n_classes);
        for (int k = 1; k <= train.n_classes; ++k) {
          const ParamVector w = fit_logistic(ovr_view(full, k), scfg);
          probs.col(k - 1) = predict_proba(w, test.features);
        }
        Eigen::VectorXi pred(test.size());
        for (Eigen::Index i = 0; i < test.size(); ++i) {
          int best = 0;
          for (int k = 1; k < train.n_classes; ++k) {
            if (probs(i, k) > probs(i, best)) {
              best = k;
            }
          }
          pred[i] = best + 1;
        }
        rows[0].fold_accuracy.push_back(
            batch_accuracy(pred, test_labels_1based));

        for (std::size_t li = 0; li < cfg.learners.size(); ++li) {
          OvrModel model(batches[0], train.n_classes,
                         cfg.learners[li].olcwa);
          for (std::size_t b = 1; b < batches.size(); ++b) {
            model.step(batches[b]);
          }
          rows[li + 1].fold_accuracy.push_back(batch_accuracy(
              model.predict(test.features), test_labels_1based));
        }
      }
    }
  }

  for (auto& row : rows) {
    double mean = 0.0;
    for (double a : row.fold_accuracy) {
      mean += a;
    }
    row.mean_accuracy =
        row.fold_accuracy.empty()
            ? 0.0
            : mean / static_cast<double>(row.fold_accuracy.size());
  }
  return rows;
}

std::vector<RuntimeRow> measure_runtime(const RunConfig& cfg, int reps) {
  cfg.validate();
  if (reps < 3) {
    reps = 3;
  }
  std::vector<RuntimeRow> rows;
  rows.reserve(cfg.learners.size());
  for (const auto& spec : cfg.learners) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps) * cfg.seeds.size());
    for (const std::uint64_t seed : cfg.seeds) {
      const Stream stream = cfg.load_stream(seed);
      if (stream.n_classes != 2) {
        throw ConfigError("measure_runtime: binary streams only");
      }
      const std::vector<MiniBatch> batches =
          batch_iter(stream, cfg.batch_size);
      for (int rep = 0; rep < reps; ++rep) {
        auto learner = make_learner(spec);
        const auto start = std::chrono::steady_clock::now();
        drive_prequential(*learner, batches, seed);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(stop - start).count());
      }
    }
    std::sort(times.begin(), times.end());
    rows.push_back({spec.name, times[times.size() / 2]});
  }
  return rows;
}

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ConceptSpec concept_from_json(const json& j) {
  ConceptSpec concept_spec;
  const auto& rows = j.at("centroids");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) {
    throw ConfigError("config: empty centroid list");
  }
  const auto d = static_cast<Eigen::Index>(rows[0].size());
  concept_spec.centroids.resize(n, d);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != d) {
      throw ConfigError("config: ragged centroid rows");
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      concept_spec.centroids(r, c) = rows[r][c].get<double>();
    }
  }
  concept_spec.spread = j.value("spread", 1.0);
  concept_spec.label_noise = j.value("label_noise", 0.0);
  return concept_spec;
}

DriftSchedule schedule_from_json(const json& j) {
  const std::string type = j.value("type", "stationary");
  if (type == "stationary") {
    return DriftSchedule::stationary();
  }
  if (type == "abrupt") {
    return DriftSchedule::abrupt(j.at("at").get<long>());
  }
  if (type == "incremental") {
    return DriftSchedule::incremental(j.at("every").get<long>(),
                                      j.at("from").get<long>(),
                                      j.at("to").get<long>());
  }
  if (type == "gradual") {
    std::vector<std::pair<long, int>> segments;
    for (const auto& seg : j.at("segments")) {
      segments.emplace_back(seg[0].get<long>(), seg[1].get<int>());
    }
    return DriftSchedule::gradual(std::move(segments));
  }
  throw ConfigError("config: unknown schedule type '" + type + "'");
}

LearnerSpec learner_from_json(const json& j) {
  LearnerSpec spec;
  spec.type = j.at("type").get<std::string>();
  spec.name = j.value("name", spec.type);
  if (spec.type == "olcwa") {
    auto& m = spec.olcwa;
    m.alpha0 = j.value("alpha0", m.alpha0);
    m.rho = j.value("rho", m.rho);
    m.zeta = j.value("zeta", m.zeta);
    m.tuner_enabled = j.value("tuner", m.tuner_enabled);
    m.n_bins = j.value("n_bins", m.n_bins);
    m.eps_parallel = j.value("eps_parallel", m.eps_parallel);
    if (j.contains("window")) {
      const auto& w = j.at("window");
      if (w.is_number_integer()) {
        m.window.capacity = w.get<std::size_t>();
      } else {
        m.window.auto_size = w.value("auto", false);
        m.window.capacity = w.value("capacity", m.window.capacity);
        m.window.gamma = w.value("gamma", m.window.gamma);
        m.window.lb = w.value("lb", m.window.lb);
        m.window.ub = w.value("ub", m.window.ub);
      }
    }
    if (j.contains("kpis")) {
      m.kpis.clear();
      for (const auto& k : j.at("kpis")) {
        const std::string name = k.get<std::string>();
        if (name == "accuracy") {
          m.kpis.push_back(KpiSpec::accuracy());
        } else if (name == "logloss") {
          m.kpis.push_back(KpiSpec::logloss());
        } else {
          throw ConfigError("config: unknown kpi '" + name + "'");
        }
      }
    }
    if (j.contains("solver")) {
      const auto& s = j.at("solver");
      m.solver.max_iters = s.value("max_iters", m.solver.max_iters);
      m.solver.step_size = s.value("step_size", m.solver.step_size);
      m.solver.grad_tol = s.value("grad_tol", m.solver.grad_tol);
      m.solver.l2_reg = s.value("l2_reg", m.solver.l2_reg);
    }
  } else {
    spec.baseline.kind = baseline_kind_from_string(spec.type);
    spec.baseline.learning_rate = j.value("lambda", spec.baseline.learning_rate);
    spec.baseline.aggressiveness = j.value("C", spec.baseline.aggressiveness);
    spec.baseline.variance_floor =
        j.value("variance_floor", spec.baseline.variance_floor);
  }
  return spec;
}

json config_to_json(const RunConfig& cfg);

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }

  RunConfig cfg;
  try {
    const auto& stream = j.at("stream");
    if (stream.contains("csv")) {
      cfg.csv_path = stream.at("csv").get<std::string>();
    } else {
      StreamSpec spec;
      spec.n_points = stream.at("n_points").get<long>();
      spec.d = stream.at("d").get<Eigen::Index>();
      spec.n_classes = stream.value("classes", 2);
      spec.seed = stream.value("seed", 1);
      spec.schedule = stream.contains("schedule")
                          ? schedule_from_json(stream.at("schedule"))
                          : DriftSchedule::stationary();
      spec.concept_a = concept_from_json(stream.at("concept_a"));
      spec.concept_b = stream.contains("concept_b")
                           ? concept_from_json(stream.at("concept_b"))
                           : spec.concept_a;
      cfg.synthetic = std::move(spec);
    }
    for (const auto& l : j.at("learners")) {
      cfg.learners.push_back(learner_from_json(l));
    }
    cfg.batch_size = j.value("batch_size", cfg.batch_size);
    cfg.folds = j.value("folds", cfg.folds);
    if (j.contains("seeds")) {
      cfg.seeds.clear();
      for (const auto& s : j.at("seeds")) {
        cfg.seeds.push_back(s.get<std::uint64_t>());
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError("config field error in " + path + ": " + e.what());
  }

  // Resolve auto-sized KPI windows against the stream geometry now, so
  // model construction later is self-contained.
  for (auto& spec : cfg.learners) {
    if (spec.type == "olcwa" && spec.olcwa.window.auto_size) {
      const long n = cfg.synthetic ? cfg.synthetic->n_points
                                   : import_csv(cfg.csv_path).size();
      spec.olcwa.window.capacity = spec.olcwa.window.resolve(
          static_cast<std::size_t>(n),
          static_cast<std::size_t>(cfg.batch_size));
      spec.olcwa.window.auto_size = false;
    }
  }
  cfg.validate();
  return cfg;
}

void write_results_csv(const PrequentialResult& result,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path);
  }
  out << "learner,seed,t,kpi_acc,kpi_loss,verdict,alpha,cum_regret\n";
  for (const auto& r : result.records) {
    out << r.learner << ',' << r.seed << ',' << r.t << ','
        << fmt_double(r.kpi_acc) << ',' << fmt_double(r.kpi_loss) << ','
        << r.verdict << ',' << fmt_double(r.alpha) << ','
        << fmt_double(r.cum_regret) << '\n';
  }
  if (!out) {
    throw IoError("write failed for " + path);
  }
}

void write_mean_curves_csv(const PrequentialResult& result,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path);
  }
  out << "learner,t,mean_kpi_acc,mean_kpi_loss\n";
  for (const auto& p : result.mean_curves) {
    out << p.learner << ',' << p.t << ',' << fmt_double(p.mean_kpi_acc) << ','
        << fmt_double(p.mean_kpi_loss) << '\n';
  }
  if (!out) {
    throw IoError("write failed for " + path);
  }
}

void write_kfold_csv(const std::vector<KfoldRow>& rows,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path);
  }
  out << "learner,mean_accuracy,folds\n";
  for (const auto& row : rows) {
    out << row.learner << ',' << fmt_double(row.mean_accuracy) << ','
        << row.fold_accuracy.size() << '\n';
  }
}

namespace {

json config_to_json(const RunConfig& cfg) {
  json j;
  if (cfg.synthetic) {
    const auto& s = *cfg.synthetic;
    json stream{{"n_points", s.n_points},
                {"d", s.d},
                {"classes", s.n_classes},
                {"seed", s.seed}};
    json sched;
    switch (s.schedule.kind) {
      case DriftSchedule::Kind::Stationary:
        sched = {{"type", "stationary"}};
        break;
      case DriftSchedule::Kind::Abrupt:
        sched = {{"type", "abrupt"}, {"at", s.schedule.at}};
        break;
      case DriftSchedule::Kind::Incremental:
        sched = {{"type", "incremental"},
                 {"every", s.schedule.every},
                 {"from", s.schedule.from},
                 {"to", s.schedule.to}};
        break;
      case DriftSchedule::Kind::Gradual: {
        json segs = json::array();
        for (const auto& [len, cid] : s.schedule.segments) {
          segs.push_back({len, cid});
        }
        sched = {{"type", "gradual"}, {"segments", segs}};
        break;
      }
    }
    stream["schedule"] = sched;
    auto concept_json = [](const ConceptSpec& c) {
      json rows = json::array();
      for (Eigen::Index r = 0; r < c.centroids.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index col = 0; col < c.centroids.cols(); ++col) {
          row.push_back(c.centroids(r, col));
        }
        rows.push_back(row);
      }
      return json{{"centroids", rows},
                  {"spread", c.spread},
                  {"label_noise", c.label_noise}};
    };
    stream["concept_a"] = concept_json(s.concept_a);
    stream["concept_b"] = concept_json(s.concept_b);
    j["stream"] = stream;
  } else {
    j["stream"] = {{"csv", cfg.csv_path}};
  }

  json learners = json::array();
  for (const auto& spec : cfg.learners) {
    json l{{"name", spec.name}, {"type", spec.type}};
    if (spec.type == "olcwa") {
      const auto& m = spec.olcwa;
      l["alpha0"] = m.alpha0;
      l["rho"] = m.rho;
      l["zeta"] = m.zeta;
      l["tuner"] = m.tuner_enabled;
      l["n_bins"] = m.n_bins;
      l["eps_parallel"] = m.eps_parallel;
      l["window"] = m.window.capacity;
      json kpis = json::array();
      for (const auto& k : m.kpis) {
        kpis.push_back(to_string(k.kind));
      }
      l["kpis"] = kpis;
      l["solver"] = {{"max_iters", m.solver.max_iters},
                     {"step_size", m.solver.step_size},
                     {"grad_tol", m.solver.grad_tol},
                     {"l2_reg", m.solver.l2_reg}};
    } else {
      l["lambda"] = spec.baseline.learning_rate;
      l["C"] = spec.baseline.aggressiveness;
      l["variance_floor"] = spec.baseline.variance_floor;
    }
    learners.push_back(l);
  }
  j["learners"] = learners;
  j["batch_size"] = cfg.batch_size;
  j["folds"] = cfg.folds;
  j["seeds"] = cfg.seeds;
  return j;
}

}  // namespace

void write_manifest(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path);
  }
  out << config_to_json(cfg).dump(2) << '\n';
}

}  // namespace olcwa
