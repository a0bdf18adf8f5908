#pragma once

#include <memory>
#include <span>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/method.hpp"

namespace depthlab {

struct LocalDepthConfig {
  double beta = 0.5;
  /// Global depth being localized; its kind must not be Local.
  MethodDescriptor base{};

  void validate() const;
};

/// X followed by the reflections 2y - X_i (2n rows).
DataMatrix symmetrize(std::span<const double> y, const DataMatrix& X);

/// Row indices of X forming the depth neighbourhood of y, ascending.
///
/// Observations are ranked by their base depth w.r.t. symmetrize(y, X)
/// (descending, ties by row index). The first ceil(n beta) are kept and the
/// cut is extended through every observation tied with the last kept depth.
std::vector<std::size_t> local_neighbourhood(std::span<const double> y, const DataMatrix& X,
                                             const LocalDepthConfig& cfg);

/// Base depth of y w.r.t. its neighbourhood. With beta = 1 the neighbourhood
/// is all of X in its original order, so the result equals the global depth
/// bit for bit.
double local_depth(std::span<const double> y, const DataMatrix& X, const LocalDepthConfig& cfg);

/// Evaluator for MethodDescriptor::kind == Local (beta and local_base taken
/// from the descriptor).
std::unique_ptr<DepthEvaluator> make_local_evaluator(const DataMatrix& reference, const MethodDescriptor& method);

}  // namespace depthlab
