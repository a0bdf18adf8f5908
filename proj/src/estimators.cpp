#include "depthlab/estimators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "depthlab/depth.hpp"
#include "depthlab/geometry.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/random.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

std::vector<double> depth_median(const DataMatrix& X, std::span<const double> depths) {
  if (depths.size() != X.rows()) throw std::invalid_argument("depth count does not match the sample");
  const double top = *std::max_element(depths.begin(), depths.end());
  std::vector<double> sum(X.cols(), 0.0);
  std::size_t ties = 0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    if (depths[i] != top) continue;
    ++ties;
    for (std::size_t j = 0; j < X.cols(); ++j) sum[j] += X(i, j);
  }
  if (ties > 1) {
    for (double& v : sum) v /= static_cast<double>(ties);
  }
  return sum;
}

std::vector<double> depth_median(const DataMatrix& X, const MethodDescriptor& method) {
  return depth_median(X, compute_depth(X, X, method).values);
}

WeightedLocationScatter weighted_location_scatter(const DataMatrix& X, std::span<const double> weights) {
  if (weights.size() != X.rows()) throw std::invalid_argument("weight count does not match the sample");
  const auto d = static_cast<Eigen::Index>(X.cols());
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("total weight is zero");

  WeightedLocationScatter out;
  out.weights.assign(weights.begin(), weights.end());
  out.location = Eigen::VectorXd::Zero(d);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) out.location(j) += weights[i] * X(i, static_cast<std::size_t>(j));
  }
  out.location /= total;

  out.scatter = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd v(d);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) v(j) = X(i, static_cast<std::size_t>(j)) - out.location(j);
    out.scatter.noalias() += weights[i] * v * v.transpose();
  }
  out.scatter /= total;
  // Exact symmetry regardless of accumulation order.
  out.scatter = 0.5 * (out.scatter + out.scatter.transpose()).eval();
  return out;
}

WeightedLocationScatter cov_lp(const DataMatrix& X, double p, double a, double b) {
  if (X.rows() < 2) throw std::invalid_argument("CovLP needs at least two observations");
  // Depths lie in (0, 1], so w >= 0 there iff a >= 0 and a + b >= 0.
  if (!(a >= 0.0 && a + b >= 0.0)) throw std::invalid_argument("CovLP weights a + b x must be >= 0 on [0, 1]");
  MethodDescriptor lp;
  lp.kind = DepthMethod::LP;
  lp.p = p;
  const auto depth = compute_depth(X, X, lp).values;
  std::vector<double> w(depth.size());
  std::transform(depth.begin(), depth.end(), w.begin(), [&](double dv) { return a + b * dv; });
  return weighted_location_scatter(X, w);
}

MedianRegion bootstrap_median_region(const DataMatrix& X, const MethodDescriptor& method, std::size_t B,
                                     double gamma) {
  if (B < 100) throw std::invalid_argument("bootstrap region needs B >= 100 resamples");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("confidence gamma must lie in (0, 1)");
  const std::size_t n = X.rows(), d = X.cols();

  std::vector<double> medians(B * d);
  parallel_for(B, [&](std::size_t b) {
    CounterRng rng(method.seed, streams::kBootstrap + b);
    std::vector<std::size_t> idx(n);
    for (auto& i : idx) i = static_cast<std::size_t>(rng.below(n));
    const auto med = depth_median(X.select_rows(idx), method);
    std::copy(med.begin(), med.end(), medians.begin() + static_cast<std::ptrdiff_t>(b * d));
  });
  DataMatrix cloud(B, d, std::move(medians));

  const auto depth = compute_depth(cloud, cloud, method).values;
  std::vector<std::size_t> order(B);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return depth[i] > depth[j]; });
  order.resize(std::max<std::size_t>(1, ceil_count(B, gamma)));
  std::sort(order.begin(), order.end());

  MedianRegion out{cloud, cloud.select_rows(order), {}};
  if (d == 2) {
    std::vector<Vec2> pts(out.region.rows());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {out.region(i, 0), out.region(i, 1)};
    out.hull = convex_hull(std::move(pts));
  }
  return out;
}

}  // namespace depthlab
