#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/halfspace2d.hpp"
#include "depthlab/method.hpp"

namespace depthlab {

/// Sample point(s) of maximal depth; ties are averaged coordinate-wise.
std::vector<double> depth_median(const DataMatrix& X, const MethodDescriptor& method);
/// Same, from precomputed depths of the rows of X.
std::vector<double> depth_median(const DataMatrix& X, std::span<const double> depths);

struct WeightedLocationScatter {
  Eigen::VectorXd location;
  Eigen::MatrixXd scatter;
  std::vector<double> weights;
};

/// sum w_i X_i / sum w_i and sum w_i (X_i - T)(X_i - T)^T / sum w_i.
/// Throws std::invalid_argument for negative weights or a zero total.
WeightedLocationScatter weighted_location_scatter(const DataMatrix& X, std::span<const double> weights);

/// Depth-weighted location and scatter with weights w(d_i) = a + b d_i,
/// d_i the L^p depth (w(x) = x inside the depth) of X_i w.r.t. X.
WeightedLocationScatter cov_lp(const DataMatrix& X, double p = 1.0, double a = 1.0, double b = 1.0);

struct MedianRegion {
  DataMatrix medians;       // all B bootstrap medians, in resample order
  DataMatrix region;        // the ceil(gamma B) deepest of them
  std::vector<Vec2> hull;   // convex hull of region when d == 2, else empty
};

/// Bootstrap confidence region for the depth median. Resample b draws from
/// RNG stream (method.seed, b); the region keeps the ceil(gamma B) medians
/// deepest w.r.t. the cloud of all bootstrap medians (ties by resample
/// index). Requires B >= 100 and 0 < gamma < 1.
MedianRegion bootstrap_median_region(const DataMatrix& X, const MethodDescriptor& method, std::size_t B,
                                     double gamma);

}  // namespace depthlab
