#include "depthlab/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

namespace {

void check_xy(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y lengths differ");
  if (x.empty()) throw std::invalid_argument("regression needs at least one observation");
}

// Observations sorted by x, with group boundaries for equal x.
struct SortedDesign {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::size_t> group_end;  // exclusive end index of each equal-x run

  SortedDesign(std::span<const double> xs, std::span<const double> ys) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    for (std::size_t i : order) {
      x.push_back(xs[i]);
      y.push_back(ys[i]);
    }
    for (std::size_t i = 1; i <= x.size(); ++i) {
      if (i == x.size() || x[i] != x[i - 1]) group_end.push_back(i);
    }
  }

  std::size_t depth_count(const SimpleFit& fit) const {
    const std::size_t n = x.size();
    std::size_t total_pos = 0, total_neg = 0;
    std::vector<signed char> sign(n);
    for (std::size_t i = 0; i < n; ++i) {
      sign[i] = static_cast<signed char>(residual_sign(fit, x[i], y[i]));
      if (sign[i] >= 0) ++total_pos;
      if (sign[i] <= 0) ++total_neg;
    }
    std::size_t best = n;
    std::size_t left_pos = 0, left_neg = 0, i = 0;
    for (std::size_t end : group_end) {
      for (; i < end; ++i) {
        if (sign[i] >= 0) ++left_pos;
        if (sign[i] <= 0) ++left_neg;
      }
      const std::size_t right_pos = total_pos - left_pos, right_neg = total_neg - left_neg;
      best = std::min({best, left_pos + right_neg, left_neg + right_pos});
    }
    return best;
  }
};

// Same line up to rounding of the two-point construction.
bool same_line(const SimpleFit& a, const SimpleFit& b) {
  const double tol = 1e-9;
  return std::abs(a.slope - b.slope) <= tol * (1.0 + std::abs(a.slope)) &&
         std::abs(a.intercept - b.intercept) <= tol * (1.0 + std::abs(a.intercept));
}

}  // namespace

int residual_sign(const SimpleFit& fit, double x, double y) noexcept {
  const double r = fit.residual(x, y);
  const double scale = std::abs(y) + std::abs(fit.intercept) + std::abs(fit.slope * x);
  if (std::abs(r) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) return 0;
  return r > 0.0 ? 1 : -1;
}

double regression_depth(const SimpleFit& fit, std::span<const double> x, std::span<const double> y) {
  check_xy(x, y);
  const SortedDesign design(x, y);
  return static_cast<double>(design.depth_count(fit)) / static_cast<double>(x.size());
}

SimpleFit deepest_regression(std::span<const double> x, std::span<const double> y) {
  check_xy(x, y);
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("deepest regression needs at least two observations");
  const SortedDesign design(x, y);
  if (design.group_end.size() < 2) throw DegenerateSampleError("all x values are equal (vertical data)");

  std::vector<SimpleFit> candidates;
  candidates.reserve(n * (n - 1) / 2 + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) continue;
      const double slope = (y[j] - y[i]) / (x[j] - x[i]);
      candidates.push_back(SimpleFit{y[i] - slope * x[i], slope, std::nullopt});
    }
  }
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(SimpleFit{y[i], 0.0, std::nullopt});

  std::vector<std::size_t> counts(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t k) { counts[k] = design.depth_count(candidates[k]); });

  const std::size_t top = *std::max_element(counts.begin(), counts.end());
  std::vector<SimpleFit> deepest;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (counts[k] == top) deepest.push_back(candidates[k]);
  }
  std::sort(deepest.begin(), deepest.end(), [](const SimpleFit& a, const SimpleFit& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
  });
  deepest.erase(std::unique(deepest.begin(), deepest.end(), same_line), deepest.end());
  SimpleFit out = deepest[(deepest.size() - 1) / 2];
  out.depth = static_cast<double>(top) / static_cast<double>(n);
  return out;
}

SimpleFit least_squares(std::span<const double> x, std::span<const double> y) {
  check_xy(x, y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DegenerateSampleError("least squares needs at least two distinct x values");
  const double slope = sxy / sxx;
  return SimpleFit{my - slope * mx, slope, std::nullopt};
}

SimpleFit trim_proj_reg(std::span<const double> x, std::span<const double> y, double alpha,
                        const MethodDescriptor& projection) {
  check_xy(x, y);
  if (!(alpha >= 0.0 && alpha < 0.5)) throw std::invalid_argument("trim fraction alpha must lie in [0, 0.5)");
  const std::size_t n = x.size();
  const std::size_t trimmed = ceil_count(n, alpha);
  if (n - trimmed < 2) throw std::invalid_argument("fewer than two observations remain after trimming");

  std::vector<double> values(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[2 * i] = x[i];
    values[2 * i + 1] = y[i];
  }
  const DataMatrix Z(n, 2, std::move(values));
  const auto depth = compute_depth(Z, Z, projection.with_kind(DepthMethod::Projection)).values;

  // Ascending depth; among equal depths the higher row index is dropped first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return a > b;
  });
  std::vector<bool> keep(n, true);
  for (std::size_t k = 0; k < trimmed; ++k) keep[order[k]] = false;

  std::vector<double> kx, ky;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      kx.push_back(x[i]);
      ky.push_back(y[i]);
    }
  }
  return least_squares(kx, ky);
}

}  // namespace depthlab
