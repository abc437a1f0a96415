#include "olcwa/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace olcwa {

namespace {

// Counter-based substream: sample i owns an independent splitmix64 chain,
// so streams are random-access and order-independent to produce.
struct SampleRng {
  std::uint64_t state;

  SampleRng(std::uint64_t seed, std::uint64_t index)
      : state(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))) {}

  std::uint64_t next_u64() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Box-Muller pair from explicit uniforms; u1 is kept away from zero.
  void gaussian_pair(double& z0, double& z1) {
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    z0 = r * std::cos(2.0 * M_PI * u2);
    z1 = r * std::sin(2.0 * M_PI * u2);
  }
};

}  // namespace

void ConceptSpec::validate(int n_classes, Eigen::Index d) const {
  if (centroids.rows() != n_classes || centroids.cols() != d) {
    throw ConfigError("ConceptSpec: centroid matrix must be n_classes x d");
  }
  if (!centroids.allFinite() || !(spread > 0.0)) {
    throw ConfigError("ConceptSpec: need finite centroids and spread > 0");
  }
  if (label_noise < 0.0 || label_noise >= 1.0) {
    throw ConfigError("ConceptSpec: label_noise must be in [0,1)");
  }
  for (Eigen::Index a = 0; a < centroids.rows(); ++a) {
    for (Eigen::Index b = a + 1; b < centroids.rows(); ++b) {
      if ((centroids.row(a) - centroids.row(b)).norm() == 0.0) {
        throw ConfigError("ConceptSpec: centroids must be distinct");
      }
    }
  }
}

DriftSchedule DriftSchedule::stationary() { return {}; }

DriftSchedule DriftSchedule::abrupt(long at) {
  DriftSchedule s;
  s.kind = Kind::Abrupt;
  s.at = at;
  return s;
}

DriftSchedule DriftSchedule::incremental(long every, long from, long to) {
  DriftSchedule s;
  s.kind = Kind::Incremental;
  s.every = every;
  s.from = from;
  s.to = to;
  return s;
}

DriftSchedule DriftSchedule::gradual(std::vector<std::pair<long, int>> segs) {
  DriftSchedule s;
  s.kind = Kind::Gradual;
  s.segments = std::move(segs);
  return s;
}

void DriftSchedule::validate(long n_points) const {
  switch (kind) {
    case Kind::Stationary:
      return;
    case Kind::Abrupt:
      if (at <= 0 || at >= n_points) {
        throw InvalidSchedule("abrupt: drift index outside the stream");
      }
      return;
    case Kind::Incremental:
      if (every < 1 || from <= 0 || to < from || to >= n_points) {
        throw InvalidSchedule("incremental: bad every/from/to");
      }
      return;
    case Kind::Gradual: {
      if (segments.empty()) {
        throw InvalidSchedule("gradual: no segments");
      }
      long total = 0;
      for (const auto& [len, cid] : segments) {
        if (len < 1 || (cid != 0 && cid != 1)) {
          throw InvalidSchedule("gradual: bad segment");
        }
        total += len;
      }
      if (total != n_points) {
        throw InvalidSchedule("gradual: segment lengths must sum to the "
                              "stream length");
      }
      return;
    }
  }
}

void StreamSpec::validate() const {
  if (n_points < 1 || d < 1 || n_classes < 2) {
    throw ConfigError("StreamSpec: need n_points >= 1, d >= 1, classes >= 2");
  }
  schedule.validate(n_points);
  concept_a.validate(n_classes, d);
  if (schedule.kind != DriftSchedule::Kind::Stationary) {
    concept_b.validate(n_classes, d);
  }
}

namespace {

// Centroid matrix in force at sample index i.
Eigen::MatrixXd centroids_at(const StreamSpec& spec, long i) {
  const auto& sched = spec.schedule;
  switch (sched.kind) {
    case DriftSchedule::Kind::Stationary:
      return spec.concept_a.centroids;
    case DriftSchedule::Kind::Abrupt:
      return i < sched.at ? spec.concept_a.centroids
                          : spec.concept_b.centroids;
    case DriftSchedule::Kind::Incremental: {
      const long n_moves = (sched.to - sched.from) / sched.every + 1;
      long k = 0;
      if (i >= sched.from) {
        k = std::min(n_moves, (i - sched.from) / sched.every + 1);
      }
      const double f =
          static_cast<double>(k) / static_cast<double>(n_moves);
      return spec.concept_a.centroids +
             f * (spec.concept_b.centroids - spec.concept_a.centroids);
    }
    case DriftSchedule::Kind::Gradual: {
      long offset = 0;
      for (const auto& [len, cid] : sched.segments) {
        if (i < offset + len) {
          return cid == 0 ? spec.concept_a.centroids
                           : spec.concept_b.centroids;
        }
        offset += len;
      }
      return spec.concept_b.centroids;  // unreachable after validate()
    }
  }
  throw Error("unknown schedule kind");
}

const ConceptSpec& concept_at(const StreamSpec& spec, long i) {
  // Noise/spread follow the same switch as the centroids; interpolated
  // concepts inherit concept_a's spread and noise.
  const auto& sched = spec.schedule;
  if (sched.kind == DriftSchedule::Kind::Abrupt && i >= sched.at) {
    return spec.concept_b;
  }
  if (sched.kind == DriftSchedule::Kind::Gradual) {
    long offset = 0;
    for (const auto& [len, cid] : sched.segments) {
      if (i < offset + len) {
        return cid == 0 ? spec.concept_a : spec.concept_b;
      }
      offset += len;
    }
    return spec.concept_b;
  }
  return spec.concept_a;
}

}  // namespace

Stream generate(const StreamSpec& spec) {
  spec.validate();
  Stream stream;
  stream.n_classes = spec.n_classes;
  stream.features.resize(spec.n_points, spec.d);
  stream.labels.resize(spec.n_points);

  for (long i = 0; i < spec.n_points; ++i) {
    SampleRng rng(spec.seed, static_cast<std::uint64_t>(i));
    const Eigen::MatrixXd centroids = centroids_at(spec, i);
    const ConceptSpec& active = concept_at(spec, i);

    const int cls = std::min(
        spec.n_classes - 1,
        static_cast<int>(rng.uniform() * static_cast<double>(spec.n_classes)));

    for (Eigen::Index j = 0; j < spec.d; j += 2) {
      double z0 = 0.0, z1 = 0.0;
      rng.gaussian_pair(z0, z1);
      stream.features(i, j) = centroids(cls, j) + active.spread * z0;
      if (j + 1 < spec.d) {
        stream.features(i, j + 1) = centroids(cls, j + 1) + active.spread * z1;
      }
    }

    int label = cls;
    if (active.label_noise > 0.0 && rng.uniform() < active.label_noise) {
      if (spec.n_classes == 2) {
        label = 1 - label;
      } else {
        // Replace with a uniformly drawn different class.
        const int shift = 1 + static_cast<int>(rng.uniform() *
                                               (spec.n_classes - 1));
        label = (label + shift) % spec.n_classes;
      }
    }
    stream.labels[i] = label;
  }
  return stream;
}

double drift_magnitude(const ConceptSpec& c1, const ConceptSpec& c2) {
  if (c1.centroids.rows() != c2.centroids.rows() ||
      c1.centroids.cols() != c2.centroids.cols()) {
    throw DimensionMismatch("drift_magnitude: centroid shapes differ");
  }
  return (c1.centroids - c2.centroids).norm();
}

std::vector<MiniBatch> batch_iter(const Stream& stream, long k) {
  if (k < 1) {
    throw ConfigError("batch_iter: batch size must be >= 1");
  }
  std::vector<MiniBatch> batches;
  for (long start = 0; start < stream.size(); start += k) {
    const long len = std::min(k, stream.size() - start);
    batches.emplace_back(stream.features.middleRows(start, len),
                         stream.labels.segment(start, len));
  }
  return batches;
}

std::vector<MulticlassBatch> batch_iter_multiclass(const Stream& stream,
                                                   long k) {
  if (k < 1) {
    throw ConfigError("batch_iter_multiclass: batch size must be >= 1");
  }
  std::vector<MulticlassBatch> batches;
  for (long start = 0; start < stream.size(); start += k) {
    const long len = std::min(k, stream.size() - start);
    Eigen::VectorXi shifted = stream.labels.segment(start, len);
    shifted.array() += 1;
    batches.emplace_back(stream.features.middleRows(start, len),
                         std::move(shifted), stream.n_classes);
  }
  return batches;
}

void export_csv(const Stream& stream, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("export_csv: cannot open " + path);
  }
  for (Eigen::Index j = 0; j < stream.dim(); ++j) {
    out << 'f' << j << ',';
  }
  out << "y\n";
  char buf[64];
  for (long i = 0; i < stream.size(); ++i) {
    for (Eigen::Index j = 0; j < stream.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", stream.features(i, j));
      out << buf << ',';
    }
    out << stream.labels[i] << '\n';
  }
  if (!out) {
    throw IoError("export_csv: write failed for " + path);
  }
}

Stream import_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("import_csv: cannot open " + path);
  }
  std::string header;
  if (!std::getline(in, header)) {
    throw IoError("import_csv: empty file " + path);
  }
  Eigen::Index d = 0;
  {
    std::stringstream ss(header);
    std::string col;
    while (std::getline(ss, col, ',')) {
      if (col == "y") {
        break;
      }
      if (col != "f" + std::to_string(d)) {
        throw IoError("import_csv: unexpected column '" + col + "'");
      }
      ++d;
    }
  }
  if (d < 1) {
    throw IoError("import_csv: no feature columns in " + path);
  }

  std::vector<double> values;
  std::vector<int> labels;
  std::string line;
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) {
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (!std::getline(ss, cell, ',')) {
        throw IoError("import_csv: short row " + std::to_string(row));
      }
      values.push_back(std::stod(cell));
    }
    if (!std::getline(ss, cell, ',')) {
      throw IoError("import_csv: missing label on row " + std::to_string(row));
    }
    labels.push_back(std::stoi(cell));
  }
  if (labels.empty()) {
    throw IoError("import_csv: no data rows in " + path);
  }

  Stream stream;
  const long n = static_cast<long>(labels.size());
  stream.features.resize(n, d);
  stream.labels.resize(n);
  int max_label = 0;
  for (long i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      stream.features(i, j) = values[static_cast<std::size_t>(i * d + j)];
    }
    stream.labels[i] = labels[static_cast<std::size_t>(i)];
    if (stream.labels[i] < 0) {
      throw IoError("import_csv: negative label on row " + std::to_string(i + 2));
    }
    max_label = std::max(max_label, stream.labels[i]);
  }
  stream.n_classes = std::max(2, max_label + 1);
  return stream;
}

}  // namespace olcwa
