#include "depthlab/local_depth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "depthlab/errors.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

void LocalDepthConfig::validate() const {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("locality beta must lie in (0, 1]");
  if (base.kind == DepthMethod::Local) throw std::invalid_argument("local depth cannot localize itself");
  base.validate();
}

DataMatrix symmetrize(std::span<const double> y, const DataMatrix& X) {
  const std::size_t n = X.rows(), d = X.cols();
  if (y.size() != d) throw std::invalid_argument("point dimension does not match the sample");
  std::vector<double> values(X.values().begin(), X.values().end());
  values.reserve(2 * n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) values.push_back(2.0 * y[j] - X(i, j));
  }
  return DataMatrix(2 * n, d, std::move(values));
}

std::vector<std::size_t> local_neighbourhood(std::span<const double> y, const DataMatrix& X,
                                             const LocalDepthConfig& cfg) {
  cfg.validate();
  const std::size_t n = X.rows();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (ceil_count(n, cfg.beta) == n) return all;

  const DataMatrix combined = symmetrize(y, X);
  const auto evaluator = make_evaluator(combined, cfg.base);

  std::vector<double> depth(n);
  for (std::size_t i = 0; i < n; ++i) depth[i] = evaluator->depth(X.row(i));

  std::vector<std::size_t> order = std::move(all);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] > depth[b]; });

  std::size_t keep = std::max<std::size_t>(1, ceil_count(n, cfg.beta));
  const double cut = depth[order[keep - 1]];
  while (keep < n && depth[order[keep]] == cut) ++keep;

  std::vector<std::size_t> retained(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(retained.begin(), retained.end());
  return retained;
}

double local_depth(std::span<const double> y, const DataMatrix& X, const LocalDepthConfig& cfg) {
  const auto retained = local_neighbourhood(y, X, cfg);
  const bool needs_covariance = cfg.base.kind == DepthMethod::Mahalanobis;
  if (needs_covariance && retained.size() < X.cols() + 1) {
    throw DegenerateSampleError("local neighbourhood has " + std::to_string(retained.size()) +
                                " points; Mahalanobis depth needs at least d + 1 = " + std::to_string(X.cols() + 1));
  }
  if (retained.size() == X.rows()) return make_evaluator(X, cfg.base)->depth(y);
  return make_evaluator(X.select_rows(retained), cfg.base)->depth(y);
}

namespace {

class LocalEvaluator final : public DepthEvaluator {
 public:
  LocalEvaluator(const DataMatrix& reference, const MethodDescriptor& method) : reference_(reference) {
    cfg_.beta = method.beta;
    cfg_.base = method.with_kind(method.local_base);
    cfg_.validate();
    if (ceil_count(reference_.rows(), cfg_.beta) == reference_.rows()) global_ = make_evaluator(reference_, cfg_.base);
  }

  double depth(std::span<const double> y) const override {
    return global_ ? global_->depth(y) : local_depth(y, reference_, cfg_);
  }
  std::size_t dim() const noexcept override { return reference_.cols(); }

 private:
  DataMatrix reference_;
  LocalDepthConfig cfg_;
  // Set when every observation is always retained.
  std::unique_ptr<DepthEvaluator> global_;
};

}  // namespace

std::unique_ptr<DepthEvaluator> make_local_evaluator(const DataMatrix& reference, const MethodDescriptor& method) {
  return std::make_unique<LocalEvaluator>(reference, method);
}

}  // namespace depthlab
