#include "depthlab/inference.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/estimators.hpp"
#include "depthlab/geometry.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/random.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

namespace {

DataMatrix concat(const DataMatrix& X, const DataMatrix& Y) {
  std::vector<double> values(X.values().begin(), X.values().end());
  values.insert(values.end(), Y.values().begin(), Y.values().end());
  return DataMatrix(X.rows() + Y.rows(), X.cols(), std::move(values));
}

DataMatrix shift(const DataMatrix& X, std::span<const double> by) {
  std::vector<double> values(X.values().begin(), X.values().end());
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t j = 0; j < X.cols(); ++j) values[i * X.cols() + j] -= by[j];
  }
  return DataMatrix(X.rows(), X.cols(), std::move(values));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

void require_bivariate(const DataMatrix& X, const char* what) {
  // TODO: d = 3 via exact hull volume (needs a 3D hull).
  if (X.cols() != 2) throw std::invalid_argument(std::string(what) + " is implemented for bivariate data only");
}

std::vector<Vec2> region_points(const DataMatrix& X, std::span<const double> depth, double alpha) {
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    if (depth[i] >= alpha) pts.push_back({X(i, 0), X(i, 1)});
  }
  return pts;
}

}  // namespace

DDPlotData dd_plot(const DataMatrix& X, const DataMatrix& Y, const MethodDescriptor& method, bool center) {
  if (X.cols() != Y.cols()) throw std::invalid_argument("DD-plot samples differ in dimension");
  const DataMatrix Xc = center ? shift(X, depth_median(X, method)) : X;
  const DataMatrix Yc = center ? shift(Y, depth_median(Y, method)) : Y;
  const DataMatrix Z = concat(Xc, Yc);

  DDPlotData out;
  out.depth_x = compute_depth(Z, Xc, method).values;
  out.depth_y = compute_depth(Z, Yc, method).values;
  out.labels.assign(X.rows(), SampleLabel::X);
  out.labels.insert(out.labels.end(), Y.rows(), SampleLabel::Y);
  out.method_label = std::string(to_string(method.kind));
  return out;
}

DDPlotData dd_mvnorm(const DataMatrix& X, std::size_t size, bool robust, double alpha_cut, std::uint64_t seed,
                     const MethodDescriptor& method) {
  const std::size_t n = X.rows(), d = X.cols();
  if (size == 0) throw std::invalid_argument("theoretical sample size must be >= 1");
  if (n <= d) throw SingularCovarianceError(std::min(n > 0 ? n - 1 : 0, d), d);
  if (!(alpha_cut >= 0.0 && alpha_cut < 1.0)) throw std::invalid_argument("alpha cut must lie in [0, 1)");

  Eigen::VectorXd mu;
  Eigen::MatrixXd cov;
  if (!robust) {
    const std::vector<double> w(n, 1.0);
    const auto est = weighted_location_scatter(X, w);
    mu = est.location;
    cov = est.scatter * (static_cast<double>(n) / static_cast<double>(n - 1));
  } else {
    MethodDescriptor lp;
    lp.kind = DepthMethod::LP;
    const auto depth = compute_depth(X, X, lp).values;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 + depth[i];
    const std::size_t cut = std::min(ceil_count(n, alpha_cut), n - (d + 1));
    for (std::size_t k = 0; k < cut; ++k) w[order[k]] = 0.0;
    const auto est = weighted_location_scatter(X, w);
    mu = est.location;
    cov = est.scatter;

    const Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) throw SingularCovarianceError(d - 1, d);
    std::vector<double> dist2(n);
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXd v(d);
      for (std::size_t j = 0; j < d; ++j) v(static_cast<Eigen::Index>(j)) = X(i, j) - mu(static_cast<Eigen::Index>(j));
      dist2[i] = llt.matrixL().solve(v).squaredNorm();
    }
    const double chi2_median = boost::math::quantile(boost::math::chi_squared(static_cast<double>(d)), 0.5);
    cov *= median(dist2) / chi2_median;
  }

  const Eigen::LLT<Eigen::MatrixXd> chol(cov);
  if (chol.info() != Eigen::Success) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov, Eigen::EigenvaluesOnly);
    const double tol = 1e-10 * cov.diagonal().maxCoeff();
    throw SingularCovarianceError(static_cast<std::size_t>((eig.eigenvalues().array() > tol).count()), d);
  }
  const Eigen::MatrixXd L = chol.matrixL();

  std::vector<double> draws(size * d);
  for (std::size_t k = 0; k < size; ++k) {
    CounterRng rng(seed, streams::kNormalSample + k);
    Eigen::VectorXd z(d);
    for (std::size_t j = 0; j < d; ++j) z(static_cast<Eigen::Index>(j)) = rng.normal();
    const Eigen::VectorXd x = mu + L * z;
    for (std::size_t j = 0; j < d; ++j) draws[k * d + j] = x(static_cast<Eigen::Index>(j));
  }
  return dd_plot(X, DataMatrix(size, d, std::move(draws)), method, false);
}

std::vector<std::size_t> rank_by_depth(std::span<const double> depths, std::span<const std::size_t> sub) {
  std::vector<double> sorted(depths.begin(), depths.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> ranks;
  ranks.reserve(sub.size());
  for (std::size_t l : sub) {
    if (l >= depths.size()) throw std::out_of_range("rank index out of range");
    ranks.push_back(static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), depths[l]) - sorted.begin()));
  }
  return ranks;
}

Alternative parse_alternative(std::string_view name) {
  if (name == "greater") return Alternative::Greater;
  if (name == "less") return Alternative::Less;
  if (name == "two-sided" || name == "two.sided" || name == "two_sided") return Alternative::TwoSided;
  throw std::invalid_argument("unknown alternative '" + std::string(name) + "' (greater, less, two-sided)");
}

std::string_view to_string(Alternative a) noexcept {
  switch (a) {
    case Alternative::Greater:
      return "greater";
    case Alternative::Less:
      return "less";
    case Alternative::TwoSided:
      return "two-sided";
  }
  return "unknown";
}

WilcoxonResult wilcoxon_from_ranks(double S, std::size_t m, std::size_t n, Alternative alternative) {
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  WilcoxonResult r;
  r.statistic = S;
  r.m = m;
  r.n = n;
  r.mean = 0.5 * md * (md + nd + 1.0);
  r.variance = md * nd * (md + nd + 1.0) / 12.0;
  const double sd = std::sqrt(r.variance);
  const double diff = S - r.mean;
  switch (alternative) {
    case Alternative::Greater:
      r.p_value = 1.0 - normal_cdf((diff - 0.5) / sd);
      break;
    case Alternative::Less:
      r.p_value = normal_cdf((diff + 0.5) / sd);
      break;
    case Alternative::TwoSided: {
      const double correction = diff > 0.0 ? 0.5 : (diff < 0.0 ? -0.5 : 0.0);
      const double z = (diff - correction) / sd;
      r.p_value = std::min(1.0, 2.0 * std::min(normal_cdf(z), 1.0 - normal_cdf(z)));
      break;
    }
  }
  r.p_value = std::clamp(r.p_value, 0.0, 1.0);
  return r;
}

WilcoxonResult m_wilcoxon_test(const DataMatrix& X, const DataMatrix& Y, const MethodDescriptor& method,
                               Alternative alternative) {
  if (X.cols() != Y.cols()) throw std::invalid_argument("Wilcoxon samples differ in dimension");
  if (X.rows() < 2 || Y.rows() < 2) throw std::invalid_argument("Wilcoxon test needs at least two observations per sample");
  const DataMatrix Z = concat(X, Y);
  const auto depth = compute_depth(Z, Z, method).values;
  std::vector<std::size_t> sub(X.rows());
  std::iota(sub.begin(), sub.end(), std::size_t{0});
  const auto ranks = rank_by_depth(depth, sub);
  const double S = static_cast<double>(std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}));
  return wilcoxon_from_ranks(S, X.rows(), Y.rows(), alternative);
}

std::vector<double> default_alpha_grid() {
  std::vector<double> a(101);
  for (std::size_t i = 0; i <= 100; ++i) a[i] = static_cast<double>(i) / 100.0;
  return a;
}

CurveData scale_curve(const DataMatrix& X, std::span<const double> alphas, const MethodDescriptor& method) {
  require_bivariate(X, "scale curve");
  const auto depth = compute_depth(X, X, method).values;
  CurveData out;
  out.kind = CurveKind::Scale;
  out.method_label = std::string(to_string(method.kind));
  out.alphas.assign(alphas.begin(), alphas.end());
  out.values.resize(alphas.size());
  parallel_for(alphas.size(), [&](std::size_t k) {
    out.values[k] = polygon_area(convex_hull(region_points(X, depth, alphas[k])));
  });
  return out;
}

CurveData asymmetry_curve(const DataMatrix& X, std::span<const double> alphas, const MethodDescriptor& method,
                          bool moving_median) {
  require_bivariate(X, "asymmetry curve");
  const auto depth = compute_depth(X, X, method).values;
  const auto global_median = depth_median(X, depth);

  std::vector<double> values(alphas.size());
  std::vector<bool> defined(alphas.size(), false);
  parallel_for(alphas.size(), [&](std::size_t k) {
    const auto pts = region_points(X, depth, alphas[k]);
    const double area = polygon_area(convex_hull(pts));
    if (!(area > 0.0)) return;
    std::vector<double> flat;
    flat.reserve(2 * pts.size());
    for (const Vec2& p : pts) flat.insert(flat.end(), p.begin(), p.end());
    const DataMatrix region(pts.size(), 2, std::move(flat));
    const auto mean = region.mean();
    const auto med = moving_median ? depth_median(region, method) : global_median;
    values[k] = std::hypot(mean[0] - med[0], mean[1] - med[1]) / std::sqrt(area);
    defined[k] = true;
  });

  CurveData out;
  out.kind = CurveKind::Asymmetry;
  out.method_label = std::string(to_string(method.kind));
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!defined[k]) continue;
    out.alphas.push_back(alphas[k]);
    out.values.push_back(values[k]);
  }
  return out;
}

}  // namespace depthlab
