#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "depthlab/data_matrix.hpp"
#include "depthlab/location_scale.hpp"
#include "depthlab/random.hpp"
#include "depthlab/regression.hpp"

namespace testing_support {

using depthlab::DataMatrix;
using depthlab::LSFit;
using depthlab::SimpleFit;

inline DataMatrix gaussian_sample(std::size_t n, std::size_t d, std::uint64_t seed) {
  depthlab::CounterRng rng(seed, depthlab::streams::kUser);
  std::vector<double> v(n * d);
  for (double& x : v) x = rng.normal();
  return DataMatrix(n, d, std::move(v));
}

// Independent oracle: exact bivariate halfspace depth by evaluating the closed
// halfplane count on every arc between consecutive critical angles, where a
// critical angle is one whose boundary line passes through some X_i.
inline double halfspace_depth_oracle(std::span<const double> y, const DataMatrix& X) {
  const std::size_t n = X.rows();
  std::size_t at_y = 0;
  std::vector<double> critical;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = X(i, 0) - y[0], dy = X(i, 1) - y[1];
    if (dx == 0.0 && dy == 0.0) {
      ++at_y;
      continue;
    }
    const double a = std::atan2(dy, dx);
    for (double c : {a + std::numbers::pi / 2, a - std::numbers::pi / 2}) {
      critical.push_back(std::remainder(c, 2 * std::numbers::pi));
    }
  }
  if (critical.empty()) return static_cast<double>(at_y) / static_cast<double>(n);
  std::sort(critical.begin(), critical.end());
  std::size_t best = n;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    const double next = k + 1 < critical.size() ? critical[k + 1] : critical[0] + 2 * std::numbers::pi;
    const double theta = 0.5 * (critical[k] + next);
    const double ux = std::cos(theta), uy = std::sin(theta);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (ux * (X(i, 0) - y[0]) + uy * (X(i, 1) - y[1]) >= 0.0) ++count;
    }
    best = std::min(best, count);
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

// Residual signs given exactly by integer cross products for a line through
// two integer observations, or by a line with small integer coefficients.
struct ExactLine {
  long x1, y1, x2, y2;  // through (x1, y1), (x2, y2) with x1 != x2

  int sign(long x, long y) const {
    const long v = (y - y1) * (x2 - x1) - (y2 - y1) * (x - x1);
    const int s = (v > 0) - (v < 0);
    return x2 > x1 ? s : -s;
  }
  SimpleFit fit() const {
    const double slope = static_cast<double>(y2 - y1) / static_cast<double>(x2 - x1);
    return SimpleFit{static_cast<double>(y1) - slope * static_cast<double>(x1), slope, std::nullopt};
  }
};

// Fewest observations whose removal leaves a nonfit: some v different from
// every remaining x with all residuals strictly negative on one side and
// strictly positive on the other.
inline std::size_t nonfit_oracle(const std::vector<long>& x, const std::vector<int>& sign) {
  const std::size_t n = x.size();
  std::size_t best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const auto removed = static_cast<std::size_t>(__builtin_popcount(mask));
    if (removed >= best) continue;
    std::vector<long> cuts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) cuts.push_back(2 * x[i]);
    }
    // Candidate tilt points (doubled): below everything and just above each x.
    std::vector<long> vs = {-1000};
    for (long c : cuts) vs.push_back(c + 1);
    bool nonfit = false;
    for (long v : vs) {
      for (int orient : {1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (mask >> i & 1u) continue;
          const int want = 2 * x[i] < v ? orient : -orient;
          ok = sign[i] == want;
        }
        nonfit |= ok;
      }
    }
    if (nonfit) best = removed;
  }
  return best;
}

// min over a dense set of angles of the fraction of gradients in the closed
// halfplane {g : u . g >= 0}.
inline double ls_depth_brute(const depthlab::LSFit& fit, const std::vector<double>& y, int angles) {
  const double c = fit.nu / (fit.nu + 1.0);
  std::size_t best = y.size();
  for (int k = 0; k < angles; ++k) {
    const double t = 2 * std::numbers::pi * k / angles;
    std::size_t count = 0;
    for (double v : y) {
      const double tau = (v - fit.mu) / fit.sigma;
      if (std::cos(t) * tau + std::sin(t) * c * (tau * tau - 1.0) >= 0.0) ++count;
    }
    best = std::min(best, count);
  }
  return static_cast<double>(best) / static_cast<double>(y.size());
}

}  // namespace testing_support
