#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/method.hpp"

namespace depthlab {

enum class SampleLabel { X, Y };

/// Depths of every point of the combined sample X u Y (X rows first)
/// w.r.t. each of the two samples.
struct DDPlotData {
  std::vector<double> depth_x;
  std::vector<double> depth_y;
  std::vector<SampleLabel> labels;
  std::string method_label;
};

/// When center is set both samples are first shifted so that their depth
/// medians sit at the origin.
DDPlotData dd_plot(const DataMatrix& X, const DataMatrix& Y, const MethodDescriptor& method, bool center = false);

/// DD-plot of X against `size` draws from a normal distribution fitted to X.
/// Classical fit: sample mean and (n-1)-covariance. Robust fit: CovLP
/// weights (p = 2, a = b = 1) with the alpha_cut fraction of least L^p-deep
/// observations given weight zero, the scatter rescaled so the median squared
/// Mahalanobis distance matches the chi-square median. Draws use RNG streams
/// keyed by `seed`.
DDPlotData dd_mvnorm(const DataMatrix& X, std::size_t size, bool robust, double alpha_cut, std::uint64_t seed,
                     const MethodDescriptor& method);

/// R(l) = #{j : D_j <= D_l} for each l in sub.
std::vector<std::size_t> rank_by_depth(std::span<const double> depths, std::span<const std::size_t> sub);

enum class Alternative { Greater, Less, TwoSided };
Alternative parse_alternative(std::string_view name);
std::string_view to_string(Alternative a) noexcept;

struct WilcoxonResult {
  double statistic = 0.0;  // S, the sum of the X ranks
  double p_value = 1.0;
  double mean = 0.0;       // m (m + n + 1) / 2
  double variance = 0.0;   // m n (m + n + 1) / 12
  std::size_t m = 0;
  std::size_t n = 0;
};

/// Normal approximation with 0.5 continuity correction for a rank sum S of
/// m out of m + n ranks.
WilcoxonResult wilcoxon_from_ranks(double S, std::size_t m, std::size_t n, Alternative alternative);

/// Depth-based multivariate Wilcoxon rank-sum test: depths w.r.t. the
/// combined sample Z = X u Y, ranks by rank_by_depth, S summed over X
/// (size m). Requires m, n >= 2.
WilcoxonResult m_wilcoxon_test(const DataMatrix& X, const DataMatrix& Y, const MethodDescriptor& method,
                               Alternative alternative = Alternative::Greater);

enum class CurveKind { Scale, Asymmetry };

struct CurveData {
  std::vector<double> alphas;
  std::vector<double> values;
  CurveKind kind = CurveKind::Scale;
  std::string method_label;
};

/// 0, 0.01, ..., 1
std::vector<double> default_alpha_grid();

/// Area of the convex hull of {x_i : D(x_i) >= alpha}, zero for fewer than
/// three points. Bivariate data only.
CurveData scale_curve(const DataMatrix& X, std::span<const double> alphas, const MethodDescriptor& method);

/// |mean(D_alpha) - med| / sqrt(area(D_alpha)) where med is the depth median
/// of X, or of the region itself when moving_median is set. Levels whose
/// region has zero area are omitted. Bivariate data only.
CurveData asymmetry_curve(const DataMatrix& X, std::span<const double> alphas, const MethodDescriptor& method,
                          bool moving_median = false);

}  // namespace depthlab
