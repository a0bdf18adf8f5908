#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/method.hpp"

namespace depthlab {

/// Depth values on a rectangular lattice: z[iy][ix] is the depth at
/// (xs[ix], ys[iy]).
struct DepthGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::vector<double>> z;
  std::string label;  // method name, shown in plot legends
};

/// Range [lo - f (hi - lo), hi + f (hi - lo)] of a coordinate.
std::pair<double, double> extend_range(const std::vector<double>& values, double fraction = 0.1);

/// n equally spaced values from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// gridN x gridN depths over the bounding box of a bivariate sample,
/// extended by 10% of the range on each side.
DepthGrid contour_grid(const DataMatrix& X, std::size_t grid_n, const MethodDescriptor& method);

}  // namespace depthlab
