#include "depthlab/depth.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "depthlab/errors.hpp"
#include "depthlab/halfspace2d.hpp"
#include "depthlab/local_depth.hpp"
#include "depthlab/parallel.hpp"

namespace depthlab {

namespace {

void check_dim(std::span<const double> y, std::size_t d) {
  if (y.size() != d) throw std::invalid_argument("point dimension does not match the sample");
}

class EuclideanEvaluator final : public DepthEvaluator {
 public:
  explicit EuclideanEvaluator(const DataMatrix& X) : mean_(X.mean()) {}

  double depth(std::span<const double> y) const override {
    check_dim(y, mean_.size());
    double s = 0.0;
    for (std::size_t j = 0; j < mean_.size(); ++j) s += (y[j] - mean_[j]) * (y[j] - mean_[j]);
    return 1.0 / (1.0 + s);
  }
  std::size_t dim() const noexcept override { return mean_.size(); }

 private:
  std::vector<double> mean_;
};

class MahalanobisEvaluator final : public DepthEvaluator {
 public:
  explicit MahalanobisEvaluator(const DataMatrix& X) : mean_(X.mean()) {
    const std::size_t n = X.rows(), d = X.cols();
    if (n < 2) throw SingularCovarianceError(0, d);
    Eigen::MatrixXd centered(n, d);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) centered(i, j) = X(i, j) - mean_[j];
    }
    const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);

    const double tol = 1e-10 * cov.diagonal().maxCoeff();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov, Eigen::EigenvaluesOnly);
    const auto rank = static_cast<std::size_t>((eig.eigenvalues().array() > tol).count());
    if (rank < d || !(tol > 0.0)) throw SingularCovarianceError(rank, d);

    llt_.compute(cov);
    if (llt_.info() != Eigen::Success) throw SingularCovarianceError(rank, d);
  }

  double depth(std::span<const double> y) const override {
    check_dim(y, mean_.size());
    Eigen::VectorXd v(mean_.size());
    for (std::size_t j = 0; j < mean_.size(); ++j) v(static_cast<Eigen::Index>(j)) = y[j] - mean_[j];
    const Eigen::VectorXd z = llt_.matrixL().solve(v);
    return 1.0 / (1.0 + z.squaredNorm());
  }
  std::size_t dim() const noexcept override { return mean_.size(); }

 private:
  std::vector<double> mean_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

double lp_norm(std::span<const double> a, std::span<const double> b, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
  }
  if (p == 1.0) {
    for (std::size_t j = 0; j < a.size(); ++j) s += std::abs(a[j] - b[j]);
    return s;
  }
  for (std::size_t j = 0; j < a.size(); ++j) s += std::pow(std::abs(a[j] - b[j]), p);
  return std::pow(s, 1.0 / p);
}

class LPEvaluator final : public DepthEvaluator {
 public:
  LPEvaluator(const DataMatrix& X, double p, WeightFunction w) : X_(X), p_(p), w_(w) {
    if (!(p >= 1.0)) throw std::invalid_argument("L^p exponent must be >= 1");
    w_.validate();
  }

  double depth(std::span<const double> y) const override {
    check_dim(y, X_.cols());
    double s = 0.0;
    for (std::size_t i = 0; i < X_.rows(); ++i) s += w_(lp_norm(y, X_.row(i), p_));
    return 1.0 / (1.0 + s / static_cast<double>(X_.rows()));
  }
  std::size_t dim() const noexcept override { return X_.cols(); }

 private:
  DataMatrix X_;
  double p_;
  WeightFunction w_;
};

std::vector<double> project_sample(const DataMatrix& X, const ProjectionSet& proj, std::size_t k) {
  std::vector<double> out(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) out[i] = proj.project(k, X.row(i));
  return out;
}

void check_projection_dim(const DataMatrix& X, const ProjectionSet& proj) {
  if (proj.dim() != X.cols()) throw std::invalid_argument("projection set dimension does not match the sample");
}

class ProjectionEvaluator final : public DepthEvaluator {
 public:
  ProjectionEvaluator(const DataMatrix& X, ProjectionSet proj) : proj_(std::move(proj)) {
    check_projection_dim(X, proj_);
    const std::size_t k = proj_.size();
    median_.resize(k);
    mad_.resize(k);
    parallel_for(k, [&](std::size_t i) {
      std::vector<double> values = project_sample(X, proj_, i);
      std::sort(values.begin(), values.end());
      median_[i] = sorted_median(values);
      for (double& v : values) v = std::abs(v - median_[i]);
      std::sort(values.begin(), values.end());
      mad_[i] = sorted_median(values);
    });
    if (std::none_of(mad_.begin(), mad_.end(), [](double m) { return m > 0.0; })) {
      throw DegenerateSampleError("projection depth: every direction has zero MAD");
    }
  }

  double depth(std::span<const double> y) const override {
    check_dim(y, proj_.dim());
    double worst = 0.0;
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      if (!(mad_[i] > 0.0)) continue;
      worst = std::max(worst, std::abs(proj_.project(i, y) - median_[i]) / mad_[i]);
    }
    return 1.0 / (1.0 + worst);
  }
  std::size_t dim() const noexcept override { return proj_.dim(); }

 private:
  ProjectionSet proj_;
  std::vector<double> median_;
  std::vector<double> mad_;
};

/// min over directions of a univariate region-family depth.
class RegionProjectionEvaluator final : public DepthEvaluator {
 public:
  RegionProjectionEvaluator(const DataMatrix& X, ProjectionSet proj, RegionFlavor flavor) : proj_(std::move(proj)) {
    check_projection_dim(X, proj_);
    families_.reserve(proj_.size());
    std::vector<std::vector<double>> projected(proj_.size());
    parallel_for(proj_.size(), [&](std::size_t i) { projected[i] = project_sample(X, proj_, i); });
    for (auto& values : projected) families_.emplace_back(flavor, std::move(values));
  }

  double depth(std::span<const double> y) const override {
    check_dim(y, proj_.dim());
    double best = 1.0;
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      best = std::min(best, families_[i].depth(proj_.project(i, y)));
      if (best == 0.0) break;
    }
    return best;
  }
  std::size_t dim() const noexcept override { return proj_.dim(); }

 private:
  ProjectionSet proj_;
  std::vector<RegionFamily1D> families_;
};

}  // namespace

ProjectionSet projections_for(const MethodDescriptor& method, std::size_t dim) {
  return ProjectionSet(dim, method.nproj, method.seed);
}

std::unique_ptr<DepthEvaluator> make_evaluator(const DataMatrix& reference, const MethodDescriptor& method) {
  method.validate();
  switch (method.kind) {
    case DepthMethod::Euclidean:
      return std::make_unique<EuclideanEvaluator>(reference);
    case DepthMethod::Mahalanobis:
      return std::make_unique<MahalanobisEvaluator>(reference);
    case DepthMethod::LP:
      return std::make_unique<LPEvaluator>(reference, method.p, method.weight);
    case DepthMethod::Projection:
      return std::make_unique<ProjectionEvaluator>(reference, projections_for(method, reference.cols()));
    case DepthMethod::Tukey:
      return std::make_unique<RegionProjectionEvaluator>(reference, projections_for(method, reference.cols()),
                                                         RegionFlavor::Tukey);
    case DepthMethod::Zonoid:
      return std::make_unique<RegionProjectionEvaluator>(reference, projections_for(method, reference.cols()),
                                                         RegionFlavor::Zonoid);
    case DepthMethod::Local:
      return make_local_evaluator(reference, method);
    case DepthMethod::StudentLS:
      break;
  }
  throw std::invalid_argument("StudentLS is a depth of (mu, sigma) fits; use the lscontour/lsmedian operations");
}

double depth_euclidean(std::span<const double> y, const DataMatrix& X) { return EuclideanEvaluator(X).depth(y); }

double depth_mahalanobis(std::span<const double> y, const DataMatrix& X) { return MahalanobisEvaluator(X).depth(y); }

double depth_lp(std::span<const double> y, const DataMatrix& X, double p, const WeightFunction& w) {
  return LPEvaluator(X, p, w).depth(y);
}

double depth_projection(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj) {
  return ProjectionEvaluator(X, proj).depth(y);
}

double depth_tukey_approx(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj) {
  return RegionProjectionEvaluator(X, proj, RegionFlavor::Tukey).depth(y);
}

double depth_zonoid_approx(std::span<const double> y, const DataMatrix& X, const ProjectionSet& proj) {
  return RegionProjectionEvaluator(X, proj, RegionFlavor::Zonoid).depth(y);
}

double depth_tukey_exact_2d(std::span<const double> y, const DataMatrix& X) {
  if (X.cols() != 2) throw std::invalid_argument("exact halfspace depth is implemented for d = 2 only");
  check_dim(y, 2);
  std::vector<Vec2> rel(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) rel[i] = {X(i, 0) - y[0], X(i, 1) - y[1]};
  return static_cast<double>(min_closed_halfplane_count(rel)) / static_cast<double>(X.rows());
}

DepthVector depth_dispatch(const DepthRequest& req) {
  if (req.points.cols() != req.reference.cols()) {
    throw std::invalid_argument("points have " + std::to_string(req.points.cols()) + " columns, reference has " +
                                std::to_string(req.reference.cols()));
  }
  const auto evaluator = make_evaluator(req.reference, req.method);
  DepthVector out{std::vector<double>(req.points.rows()), req.method};
  parallel_for(req.points.rows(), [&](std::size_t i) { out.values[i] = evaluator->depth(req.points.row(i)); });
  return out;
}

DepthVector compute_depth(const DataMatrix& points, const DataMatrix& reference, const MethodDescriptor& method) {
  return depth_dispatch(DepthRequest{points, reference, method});
}

}  // namespace depthlab
