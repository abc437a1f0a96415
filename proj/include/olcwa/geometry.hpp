#ifndef OLCWA_GEOMETRY_HPP_
#define OLCWA_GEOMETRY_HPP_

#include <Eigen/Dense>
#include <optional>

#include "olcwa/errors.hpp"

namespace olcwa {

inline constexpr double kNormEps = 1e-12;        // zero-direction rejection
inline constexpr double kParallelEpsDefault = 1e-9;  // on |cos theta|

/// Augmented weight vector W = [V; b] of the hyperplane V.x + b = 0.
/// The weights may be all-zero (a degenerate fit can produce that); any
/// operation that needs a boundary direction rejects it with ZeroVector.
struct ParamVector {
  Eigen::VectorXd weights;
  double bias = 0.0;

  ParamVector() = default;
  ParamVector(Eigen::VectorXd w, double b);

  Eigen::Index dim() const { return weights.size(); }
  double direction_norm() const { return weights.norm(); }
};

/// A location in the same ambient space as the hyperplanes it anchors.
struct Point {
  Eigen::VectorXd coords;

  Point() = default;
  explicit Point(Eigen::VectorXd c);

  Eigen::Index dim() const { return coords.size(); }
};

/// How two hyperplanes sit relative to each other.
struct PlaneRelation {
  enum class Kind { Intersecting, Parallel, Coincident };

  Kind kind = Kind::Parallel;
  std::optional<Point> point;  // set iff Intersecting

  static PlaneRelation intersecting(Point p);
  static PlaneRelation parallel() { return PlaneRelation{Kind::Parallel, std::nullopt}; }
  static PlaneRelation coincident() { return PlaneRelation{Kind::Coincident, std::nullopt}; }
};

const char* to_string(PlaneRelation::Kind kind);

/// The feature weights V of W = [V; b].
Eigen::VectorXd extract_direction(const ParamVector& w);

/// v / ||v||2. Throws ZeroVector when ||v||2 <= kNormEps.
Eigen::VectorXd normalize(const Eigen::VectorXd& v);

/// (1 - alpha) * v_base + alpha * v_inc. Inputs are expected unit-length;
/// the result is not renormalized here.
Eigen::VectorXd blend_directions(const Eigen::VectorXd& v_base,
                                 const Eigen::VectorXd& v_inc, double alpha);

/// Classifies the pair as Intersecting / Parallel / Coincident using
/// eps_parallel on |cos theta|. An intersection that turns out numerically
/// singular is reported as Parallel.
PlaneRelation relate_planes(const ParamVector& w1, const ParamVector& w2,
                            double eps_parallel = kParallelEpsDefault);

/// Minimum-norm solution of {V1.x = -b1, V2.x = -b2}. Throws SingularSystem
/// when the 2x2 Gram matrix is numerically singular.
Point find_intersection_point(const ParamVector& w1, const ParamVector& w2);

/// Anchor for parallel planes: convex combination of each plane's closest
/// point to the origin, weighted (1 - alpha) base / alpha incremental.
Point fallback_anchor(const ParamVector& w_base, const ParamVector& w_inc,
                      double alpha);

/// W = [v_avg; -v_avg.p], the plane with direction v_avg through p.
ParamVector define_hyperplane(const Eigen::VectorXd& v_avg, const Point& p);

}  // namespace olcwa

#endif  // OLCWA_GEOMETRY_HPP_
