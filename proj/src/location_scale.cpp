#include "depthlab/location_scale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "depthlab/errors.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/univariate.hpp"

namespace depthlab {

void LSFit::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("scale sigma must be positive");
  if (!(nu > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
  if (!std::isfinite(mu)) throw std::invalid_argument("location mu must be finite");
}

std::vector<Vec2> ls_gradients(const LSFit& fit, std::span<const double> y, bool scaled) {
  fit.validate();
  const double c = scaled ? fit.nu / (fit.nu + 1.0) : 1.0;
  std::vector<Vec2> g(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double tau = (y[i] - fit.mu) / fit.sigma;
    g[i] = {tau, c * (tau * tau - 1.0)};
  }
  return g;
}

double ls_depth(const LSFit& fit, std::span<const double> y) {
  if (y.empty()) throw std::invalid_argument("Student depth needs a nonempty sample");
  const auto g = ls_gradients(fit, y);
  return static_cast<double>(min_closed_halfplane_count(g)) / static_cast<double>(y.size());
}

DepthGrid ls_depth_contour(std::span<const double> y, std::span<const double> mu_grid,
                           std::span<const double> sigma_grid, double nu) {
  if (mu_grid.empty() || sigma_grid.empty()) throw std::invalid_argument("Student depth contour needs nonempty grids");
  for (double s : sigma_grid) {
    if (!(s > 0.0)) throw std::invalid_argument("sigma grid values must be positive");
  }
  DepthGrid grid;
  grid.xs.assign(mu_grid.begin(), mu_grid.end());
  grid.ys.assign(sigma_grid.begin(), sigma_grid.end());
  grid.label = "StudentLS";
  grid.z.assign(sigma_grid.size(), std::vector<double>(mu_grid.size()));
  parallel_for(mu_grid.size() * sigma_grid.size(), [&](std::size_t k) {
    const std::size_t iy = k / mu_grid.size(), ix = k % mu_grid.size();
    grid.z[iy][ix] = ls_depth(LSFit{mu_grid[ix], sigma_grid[iy], nu}, y);
  });
  return grid;
}

std::pair<std::vector<double>, std::vector<double>> ls_default_grids(std::span<const double> y, std::size_t n) {
  std::vector<double> values(y.begin(), y.end());
  const auto [lo, hi] = extend_range(values);
  const double range = *std::max_element(y.begin(), y.end()) - *std::min_element(y.begin(), y.end());
  if (!(range > 0.0)) throw DegenerateSampleError("all observations are equal");
  return {linspace(lo, hi, n), linspace(range / static_cast<double>(n), range, n)};
}

namespace {

struct Best {
  LSFit fit;
  double depth = -1.0;
};

// Evaluates a mu x log-sigma lattice and returns the deepest point; ties keep
// the earliest lattice point (row-major, sigma outer).
Best search_lattice(std::span<const double> y, double nu, std::span<const double> mus,
                    std::span<const double> log_sigmas) {
  std::vector<double> depth(mus.size() * log_sigmas.size());
  parallel_for(depth.size(), [&](std::size_t k) {
    const std::size_t is = k / mus.size(), im = k % mus.size();
    depth[k] = ls_depth(LSFit{mus[im], std::exp(log_sigmas[is]), nu}, y);
  });
  const auto it = std::max_element(depth.begin(), depth.end());
  const auto k = static_cast<std::size_t>(it - depth.begin());
  return Best{LSFit{mus[k % mus.size()], std::exp(log_sigmas[k / mus.size()]), nu}, *it};
}

std::vector<double> centered_lattice(double center, double half_width, std::size_t n) {
  return linspace(center - half_width, center + half_width, n);
}

}  // namespace

LSMaxDepthResult ls_max_depth(std::span<const double> y, double nu) {
  if (y.size() < 2) throw std::invalid_argument("Student median needs at least two observations");
  if (!(nu > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();
  const double range = hi - lo;
  if (!(range > 0.0)) throw DegenerateSampleError("all observations are equal; sigma = 0 is not admissible");

  double min_gap = range;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double gap = sorted[i] - sorted[i - 1];
    if (gap > 0.0) min_gap = std::min(min_gap, gap);
  }

  constexpr std::size_t kCoarse = 41;
  constexpr std::size_t kFine = 21;
  const auto mus = linspace(lo, hi, kCoarse);
  const double ls_lo = std::log(min_gap), ls_hi = std::log(range);
  const auto log_sigmas = ls_hi > ls_lo ? linspace(ls_lo, ls_hi, kCoarse) : std::vector<double>{ls_hi};

  Best best;
  const double med = sorted_median(sorted);
  const double spread = mad(sorted);
  if (spread > 0.0) best = Best{LSFit{med, spread, nu}, ls_depth(LSFit{med, spread, nu}, y)};

  Best coarse = search_lattice(y, nu, mus, log_sigmas);
  if (coarse.depth > best.depth) best = coarse;

  double mu_step = range / static_cast<double>(kCoarse - 1);
  double ls_step = log_sigmas.size() > 1 ? (ls_hi - ls_lo) / static_cast<double>(kCoarse - 1) : 1.0;
  for (int round = 0; round < 2; ++round) {
    const auto fine_mu = centered_lattice(best.fit.mu, mu_step, kFine);
    const auto fine_ls = centered_lattice(std::log(best.fit.sigma), ls_step, kFine);
    const Best refined = search_lattice(y, nu, fine_mu, fine_ls);
    if (refined.depth > best.depth) best = refined;
    mu_step /= 10.0;
    ls_step /= 10.0;
  }
  return LSMaxDepthResult{best.fit, best.depth};
}

}  // namespace depthlab
