#include "olcwa/geometry.hpp"

#include <cmath>

namespace olcwa {

namespace {

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) {
    throw Error(std::string(what) + ": non-finite entries");
  }
}

void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace

ParamVector::ParamVector(Eigen::VectorXd w, double b)
    : weights(std::move(w)), bias(b) {
  if (weights.size() < 1) {
    throw DimensionMismatch("ParamVector: need at least one feature weight");
  }
  require_finite(weights, "ParamVector weights");
  if (!std::isfinite(bias)) {
    throw Error("ParamVector: non-finite bias");
  }
}

Point::Point(Eigen::VectorXd c) : coords(std::move(c)) {
  require_finite(coords, "Point coords");
}

PlaneRelation PlaneRelation::intersecting(Point p) {
  return PlaneRelation{Kind::Intersecting, std::move(p)};
}

const char* to_string(PlaneRelation::Kind kind) {
  switch (kind) {
    case PlaneRelation::Kind::Intersecting: return "intersecting";
    case PlaneRelation::Kind::Parallel: return "parallel";
    case PlaneRelation::Kind::Coincident: return "coincident";
  }
  return "?";
}

Eigen::VectorXd extract_direction(const ParamVector& w) { return w.weights; }

Eigen::VectorXd normalize(const Eigen::VectorXd& v) {
  const double n = v.norm();
  if (!(n > kNormEps)) {
    throw ZeroVector("normalize: vector norm " + std::to_string(n) +
                     " below threshold");
  }
  return v / n;
}

Eigen::VectorXd blend_directions(const Eigen::VectorXd& v_base,
                                 const Eigen::VectorXd& v_inc, double alpha) {
  require_same_dim(v_base.size(), v_inc.size());
  return (1.0 - alpha) * v_base + alpha * v_inc;
}

Point find_intersection_point(const ParamVector& w1, const ParamVector& w2) {
  require_same_dim(w1.dim(), w2.dim());
  const Eigen::VectorXd& v1 = w1.weights;
  const Eigen::VectorXd& v2 = w2.weights;

  // 2x2 Gram system: x = A^T (A A^T)^-1 (-b), A = [v1; v2]. Solved in
  // closed form so identical inputs give bit-identical output.
  const double g11 = v1.squaredNorm();
  const double g22 = v2.squaredNorm();
  const double g12 = v1.dot(v2);
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 1e-12 * g11 * g22) || !std::isfinite(det)) {
    throw SingularSystem("find_intersection_point: Gram determinant " +
                         std::to_string(det));
  }
  const double r1 = -w1.bias;
  const double r2 = -w2.bias;
  const double y1 = (g22 * r1 - g12 * r2) / det;
  const double y2 = (g11 * r2 - g12 * r1) / det;
  return Point(y1 * v1 + y2 * v2);
}

PlaneRelation relate_planes(const ParamVector& w1, const ParamVector& w2,
                            double eps_parallel) {
  require_same_dim(w1.dim(), w2.dim());
  const Eigen::VectorXd u1 = normalize(w1.weights);
  const Eigen::VectorXd u2 = normalize(w2.weights);
  const double c = u1.dot(u2);

  if (std::abs(c) >= 1.0 - eps_parallel) {
    // Same orientation. Coincident when the signed offsets agree too.
    const double off1 = w1.bias / w1.direction_norm();
    const double off2 = w2.bias / w2.direction_norm();
    const double sign = c >= 0.0 ? 1.0 : -1.0;
    if (std::abs(off1 - sign * off2) <= 1e-9) {
      return PlaneRelation::coincident();
    }
    return PlaneRelation::parallel();
  }
  try {
    return PlaneRelation::intersecting(find_intersection_point(w1, w2));
  } catch (const SingularSystem&) {
    return PlaneRelation::parallel();
  }
}

Point fallback_anchor(const ParamVector& w_base, const ParamVector& w_inc,
                      double alpha) {
  require_same_dim(w_base.dim(), w_inc.dim());
  // Closest point of V.x + b = 0 to the origin is -(b/||V||) * V_hat.
  const Eigen::VectorXd p_base =
      -(w_base.bias / w_base.direction_norm()) * normalize(w_base.weights);
  const Eigen::VectorXd p_inc =
      -(w_inc.bias / w_inc.direction_norm()) * normalize(w_inc.weights);
  return Point((1.0 - alpha) * p_base + alpha * p_inc);
}

ParamVector define_hyperplane(const Eigen::VectorXd& v_avg, const Point& p) {
  require_same_dim(v_avg.size(), p.dim());
  if (!(v_avg.norm() > kNormEps)) {
    throw ZeroVector("define_hyperplane: direction norm below threshold");
  }
  return ParamVector(v_avg, -v_avg.dot(p.coords));
}

}  // namespace olcwa
