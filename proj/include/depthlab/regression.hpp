#pragma once

#include <optional>
#include <span>

#include "depthlab/method.hpp"

namespace depthlab {

/// y = intercept + slope * x
struct SimpleFit {
  double intercept = 0.0;
  double slope = 0.0;
  std::optional<double> depth;

  double residual(double x, double y) const noexcept { return y - (intercept + slope * x); }
};

/// Sign of the residual of (x, y), with residuals within a few ulps of the
/// magnitudes involved treated as exact zeros (lines through two
/// observations rarely reproduce them bit-exactly).
int residual_sign(const SimpleFit& fit, double x, double y) noexcept;

/// Regression depth of a line as a proportion of n: the smallest number of
/// observations whose removal turns the fit into a nonfit.
///
/// For every tilt position t in {x_l} the observations split into L
/// (x <= t) and R (x > t); the count is min(L+ + R-, L- + R+) where +/-
/// means residual >= 0 / <= 0. A zero residual cannot be improved by any
/// other line, so it is counted on both sides. O(n log n).
double regression_depth(const SimpleFit& fit, std::span<const double> x, std::span<const double> y);

/// Deepest regression line over the candidates through every pair of
/// observations with distinct x, plus the horizontal line through each
/// observation. When several distinct lines attain the maximal depth the one
/// with the median slope is returned (lower median for an even count, ties in
/// slope ordered by intercept). Throws DegenerateSampleError when all x are
/// equal.
SimpleFit deepest_regression(std::span<const double> x, std::span<const double> y);

/// Ordinary least squares line.
SimpleFit least_squares(std::span<const double> x, std::span<const double> y);

/// Projection-depth trimmed regression: computes the bivariate projection
/// depth of each (x_i, y_i), removes the ceil(alpha n) least deep
/// observations (ties at the cut drop the higher row index first) and fits
/// least squares to the rest. Only nproj and seed of `projection` are used.
SimpleFit trim_proj_reg(std::span<const double> x, std::span<const double> y, double alpha = 0.1,
                        const MethodDescriptor& projection = {});

}  // namespace depthlab
