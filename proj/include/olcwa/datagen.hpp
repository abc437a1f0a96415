#ifndef OLCWA_DATAGEN_HPP_
#define OLCWA_DATAGEN_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "olcwa/model.hpp"
#include "olcwa/solver.hpp"

namespace olcwa {

/// Isotropic Gaussian class-conditional concept: one centroid per class,
/// shared spread, independent label flips.
struct ConceptSpec {
  Eigen::MatrixXd centroids;  // n_classes x d
  double spread = 1.0;
  double label_noise = 0.0;

  void validate(int n_classes, Eigen::Index d) const;
};

struct DriftSchedule {
  enum class Kind { Stationary, Abrupt, Incremental, Gradual };

  Kind kind = Kind::Stationary;
  long at = 0;                 // Abrupt: first index drawn from concept B
  long every = 0;              // Incremental: step between scheduled moves
  long from = 0;               // Incremental: first scheduled move index
  long to = 0;                 // Incremental: last scheduled move index
  std::vector<std::pair<long, int>> segments;  // Gradual: (length, concept id)

  static DriftSchedule stationary();
  static DriftSchedule abrupt(long at);
  static DriftSchedule incremental(long every, long from, long to);
  static DriftSchedule gradual(std::vector<std::pair<long, int>> segments);

  void validate(long n_points) const;
};

struct StreamSpec {
  long n_points = 0;
  Eigen::Index d = 0;
  int n_classes = 2;
  DriftSchedule schedule;
  ConceptSpec concept_a;
  ConceptSpec concept_b;  // ignored for Stationary
  std::uint64_t seed = 0;

  void validate() const;
};

/// A fully materialized stream: labels are 0-based class indices.
struct Stream {
  Eigen::MatrixXd features;  // n x d
  Eigen::VectorXi labels;
  int n_classes = 2;

  long size() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }
};

/// Draws the stream described by `spec`. Sample i is a pure function of
/// (seed, i), so identical specs produce bit-identical streams.
Stream generate(const StreamSpec& spec);

/// Euclidean distance between the two concepts' flattened centroids.
double drift_magnitude(const ConceptSpec& c1, const ConceptSpec& c2);

/// Consecutive non-overlapping batches of size k; the final partial batch
/// is emitted as-is. Requires binary labels.
std::vector<MiniBatch> batch_iter(const Stream& stream, long k);

/// Same slicing for multiclass streams; labels shift to {1..n_classes}.
std::vector<MulticlassBatch> batch_iter_multiclass(const Stream& stream,
                                                   long k);

/// CSV with header f0,...,f{d-1},y; floats carry 17 significant digits.
void export_csv(const Stream& stream, const std::string& path);
Stream import_csv(const std::string& path);

}  // namespace olcwa

#endif  // OLCWA_DATAGEN_HPP_
