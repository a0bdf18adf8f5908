#include "depthlab/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "depthlab/depth.hpp"
#include "depthlab/parallel.hpp"

namespace depthlab {

std::pair<double, double> extend_range(const std::vector<double>& values, double fraction) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double pad = fraction * (*hi - *lo);
  return {*lo - pad, *hi + pad};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("linspace needs at least two points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

DepthGrid contour_grid(const DataMatrix& X, std::size_t grid_n, const MethodDescriptor& method) {
  if (X.cols() != 2) throw std::invalid_argument("contour grid needs bivariate data");
  if (grid_n < 2) throw std::invalid_argument("contour grid needs gridN >= 2");
  const auto [x0, x1] = extend_range(X.column(0));
  const auto [y0, y1] = extend_range(X.column(1));

  DepthGrid grid;
  grid.xs = linspace(x0, x1, grid_n);
  grid.ys = linspace(y0, y1, grid_n);
  grid.label = std::string(to_string(method.kind));
  grid.z.assign(grid_n, std::vector<double>(grid_n));

  const auto evaluator = make_evaluator(X, method);
  parallel_for(grid_n * grid_n, [&](std::size_t k) {
    const std::size_t iy = k / grid_n, ix = k % grid_n;
    const double point[2] = {grid.xs[ix], grid.ys[iy]};
    grid.z[iy][ix] = evaluator->depth(point);
  });
  return grid;
}

}  // namespace depthlab
