#include "depthlab/binning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/grid.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

DataMatrix lag_pairs(std::span<const double> w, std::size_t k) {
  if (k < 1) throw std::invalid_argument("lag must be >= 1");
  if (k >= w.size()) throw std::invalid_argument("lag must be smaller than the window length");
  const std::size_t rows = w.size() - k;
  std::vector<double> values(2 * rows);
  for (std::size_t t = 0; t < rows; ++t) {
    values[2 * t] = w[t];
    values[2 * t + 1] = w[t + k];
  }
  return DataMatrix(rows, 2, std::move(values));
}

std::size_t BinGrid2D::total() const noexcept {
  std::size_t s = 0;
  for (const auto& row : counts) s = std::accumulate(row.begin(), row.end(), s);
  return s;
}

std::size_t axis_class(std::span<const double> breaks, double v) noexcept {
  const std::size_t m = breaks.size() - 1;
  if (v < breaks.front()) return 0;
  if (v > breaks.back()) return m + 1;
  if (v == breaks.back()) return m;
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
  return static_cast<std::size_t>(it - breaks.begin());
}

BinGrid2D binning_depth_2d(const DataMatrix& Z, std::size_t nbins, double beta, bool remove_borders,
                           const MethodDescriptor& method) {
  if (Z.cols() != 2) throw std::invalid_argument("binning needs bivariate data");
  if (nbins < 2) throw std::invalid_argument("nbins must be >= 2");
  if (Z.rows() < nbins) throw std::invalid_argument("binning needs at least nbins observations");
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0, 1]");

  const std::size_t n = Z.rows();
  const auto depth = compute_depth(Z, Z, method).values;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] > depth[b]; });
  const std::size_t keep = std::max<std::size_t>(1, ceil_count(n, beta));

  double lo = Z(order[0], 0), hi = lo;
  for (std::size_t k = 0; k < keep; ++k) {
    for (std::size_t j = 0; j < 2; ++j) {
      lo = std::min(lo, Z(order[k], j));
      hi = std::max(hi, Z(order[k], j));
    }
  }
  if (!(hi > lo)) throw DegenerateSampleError("central binning region has zero extent");

  BinGrid2D out;
  out.breaks = linspace(lo, hi, nbins + 1);
  out.counts.assign(nbins + 2, std::vector<std::size_t>(nbins + 2, 0));
  for (std::size_t i = 0; i < n; ++i) {
    ++out.counts[axis_class(out.breaks, Z(i, 1))][axis_class(out.breaks, Z(i, 0))];
  }
  for (std::size_t iy = 1; iy <= nbins; ++iy) {
    for (std::size_t ix = 1; ix <= nbins; ++ix) {
      out.midpoints.push_back({0.5 * (out.breaks[ix - 1] + out.breaks[ix]), 0.5 * (out.breaks[iy - 1] + out.breaks[iy])});
      out.counts_retained.push_back(out.counts[iy][ix]);
    }
  }
  out.borders_removed = remove_borders;
  if (remove_borders) {
    out.counts.pop_back();
    out.counts.erase(out.counts.begin());
    for (auto& row : out.counts) {
      row.pop_back();
      row.erase(row.begin());
    }
  }
  return out;
}

}  // namespace depthlab
