#pragma once

#include <span>
#include <utility>
#include <vector>

#include "depthlab/grid.hpp"
#include "depthlab/halfspace2d.hpp"

namespace depthlab {

/// Location-scale fit for the Student criterial function.
struct LSFit {
  double mu = 0.0;
  double sigma = 1.0;
  double nu = 1.0;  // degrees of freedom

  void validate() const;
};

struct LSMaxDepthResult {
  LSFit fit;
  double depth = 0.0;
};

/// Gradient cloud g_i = (tau_i, nu/(nu+1) (tau_i^2 - 1)), tau_i = (y_i - mu)/sigma.
/// With scaled = false the constant nu/(nu+1) is dropped (the depth is
/// unchanged since it only rescales the second axis).
std::vector<Vec2> ls_gradients(const LSFit& fit, std::span<const double> y, bool scaled = true);

/// Student (tangent) depth: min over u != 0 of the fraction of gradients with
/// u . g_i >= 0, by an exact angular sweep.
double ls_depth(const LSFit& fit, std::span<const double> y);

/// ls_depth over the product of mu and sigma grids: z[iy][ix] is the depth at
/// (mu_grid[ix], sigma_grid[iy]).
DepthGrid ls_depth_contour(std::span<const double> y, std::span<const double> mu_grid,
                           std::span<const double> sigma_grid, double nu);

/// Default contour grids: mu over the extended sample range, sigma from a
/// small fraction of the range up to the range.
std::pair<std::vector<double>, std::vector<double>> ls_default_grids(std::span<const double> y, std::size_t n);

/// Student median: the (mu, sigma) of maximal Student depth, searched on a
/// coarse grid followed by two rounds of 10x local refinement. The fit
/// (median, MAD) is always among the candidates. Throws DegenerateSampleError
/// if all observations are equal.
LSMaxDepthResult ls_max_depth(std::span<const double> y, double nu = 1.0);

}  // namespace depthlab
