#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/method.hpp"

namespace depthlab {

/// Rows (w[t-k], w[t]) for t = k..len-1. Throws std::invalid_argument unless
/// 1 <= k < len.
DataMatrix lag_pairs(std::span<const double> w, std::size_t k);

/// Square 2D histogram on one shared break vector l_0 < ... < l_m.
///
/// Axis classes are (-inf, l_0), [l_0, l_1), ..., [l_{m-1}, l_m], (l_m, inf):
/// m interior classes plus two borders, so counts is (m+2) x (m+2) with
/// counts[iy][ix]. The last interior class is closed so l_m itself is inside.
/// With borders removed counts keeps only the m x m interior block.
struct BinGrid2D {
  std::vector<double> breaks;
  std::vector<std::vector<std::size_t>> counts;
  /// Interior cell centres (x, y) and their counts, row-major over (iy, ix).
  std::vector<std::array<double, 2>> midpoints;
  std::vector<std::size_t> counts_retained;
  bool borders_removed = false;

  std::size_t total() const noexcept;
};

/// Axis class of v: 0 below l_0, m + 1 above l_m, else 1 + interior index.
std::size_t axis_class(std::span<const double> breaks, double v) noexcept;

/// Depth-based binning: the ceil(beta n) deepest rows of Z (method depths
/// w.r.t. Z, ties by row index) define [l_0, l_m] as the smallest interval
/// holding both coordinates of all of them; nbins interior classes split it
/// evenly. Every row of Z is then binned. beta in (0, 1], 2 <= nbins <= n.
/// Throws DegenerateSampleError when the central rows have zero extent.
BinGrid2D binning_depth_2d(const DataMatrix& Z, std::size_t nbins, double beta = 0.9, bool remove_borders = false,
                           const MethodDescriptor& method = MethodDescriptor{}.with_kind(DepthMethod::LP));

}  // namespace depthlab
