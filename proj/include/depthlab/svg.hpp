#pragma once

#include <span>
#include <string>
#include <vector>

#include "depthlab/binning.hpp"
#include "depthlab/grid.hpp"
#include "depthlab/inference.hpp"
#include "depthlab/regression.hpp"

namespace depthlab {

// Standalone SVG documents on a fixed 800 x 600 viewBox. Coordinates are
// printed with fixed precision, so equal inputs give equal bytes. Each
// renderer throws std::invalid_argument for an empty artifact.

/// One filled cell per lattice node, shaded by the decile band of its depth,
/// with isolines at the deciles of the depth range and a legend.
std::string render_grid_svg(const DepthGrid& grid);

/// Polyline through (alpha, value).
std::string render_curve_svg(const CurveData& curve);

/// Scatter of (depth_x, depth_y) coloured by sample, with the y = x segment.
std::string render_ddplot_svg(const DDPlotData& dd);

struct LabelledFit {
  SimpleFit fit;
  std::string label;
};

/// Scatter of (x, y) with each fitted line drawn across the x range.
std::string render_fits_svg(std::span<const double> x, std::span<const double> y, std::span<const LabelledFit> fits);

/// Interior bin midpoints drawn as squares whose area is proportional to the
/// count, with the break lattice.
std::string render_bins_svg(const BinGrid2D& bins);

}  // namespace depthlab
