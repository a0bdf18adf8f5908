#pragma once

#include <memory>
#include <span>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/method.hpp"
#include "depthlab/projection_set.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

struct DepthVector {
  std::vector<double> values;
  MethodDescriptor method;
};

struct DepthRequest {
  DataMatrix points;
  DataMatrix reference;
  MethodDescriptor method;
};

/// Depth of arbitrary points w.r.t. one fixed reference sample. Construction
/// does all per-sample work (means, factorizations, projected order
/// statistics); depth() is then cheap and thread-safe.
class DepthEvaluator {
 public:
  virtual ~DepthEvaluator() = default;
  virtual double depth(std::span<const double> y) const = 0;
  virtual std::size_t dim() const noexcept = 0;
};

/// Throws std::invalid_argument for an invalid descriptor or StudentLS (which
/// is a depth of fits, see location_scale.hpp), and the method's own errors
/// for unusable samples.
std::unique_ptr<DepthEvaluator> make_evaluator(const DataMatrix& reference, const MethodDescriptor& method);

/// Projection set used by the projection-property methods for a sample of
/// dimension dim under this descriptor.
ProjectionSet projections_for(const MethodDescriptor& method, std::size_t dim);

// Closed forms ---------------------------------------------------------------

/// 1 / (1 + |y - mean|^2)
double depth_euclidean(std::span<const double> y, const DataMatrix& X);

/// 1 / (1 + (y - mean)^T S^{-1} (y - mean)), S the (n-1)-normalized sample
/// covariance. Throws SingularCovarianceError when rank(S) < d.
double depth_mahalanobis(std::span<const double> y, const DataMatrix& X);

/// 1 / (1 + mean_i w(|y - X_i|_p))
double depth_lp(std::span<const double> y, const DataMatrix& X, double p, const WeightFunction& w);

// Projection-property approximations ----------------------------------------
//
// The sup/inf over the unit sphere is replaced by max/min over a finite
// ProjectionSet. A finite set can only miss the worst direction, so these
// approximations never understate the exact depth.

/// [1 + max_u |u^T y - Med(u^T X)| / MAD(u^T X)]^{-1}. Directions with zero
/// projected MAD are skipped; throws DegenerateSampleError if all are.
double depth_projection(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj);

/// min over directions of the univariate halfspace depth of u^T y in u^T X.
double depth_tukey_approx(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj);

/// min over directions of the univariate zonoid depth.
double depth_zonoid_approx(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj);

/// Exact halfspace depth in the plane: the smallest fraction of X inside a
/// closed halfplane whose boundary passes through y. Throws
/// std::invalid_argument unless X has two columns.
double depth_tukey_exact_2d(std::span<const double> y, const DataMatrix& X);

/// Depth of every row of req.points w.r.t. req.reference. Rows are evaluated
/// in parallel; the result does not depend on the thread count.
DepthVector depth_dispatch(const DepthRequest& req);

/// Convenience: depth of each row of points.
DepthVector compute_depth(const DataMatrix& points, const DataMatrix& reference, const MethodDescriptor& method);

}  // namespace depthlab
