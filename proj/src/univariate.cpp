#include "depthlab/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace depthlab {

std::size_t ceil_count(std::size_t n, double fraction) noexcept {
  if (!(fraction > 0.0)) return 0;
  if (fraction >= 1.0) return n;
  const double nd = static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(nd * fraction));
  k = std::min(k, n);
  while (k > 0 && static_cast<double>(k - 1) / nd >= fraction) --k;
  while (k < n && static_cast<double>(k) / nd < fraction) ++k;
  return k;
}

namespace {

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile probability must lie in (0, 1)");
}

}  // namespace

double lower_quantile(std::span<const double> sorted, double p) {
  check_probability(p);
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  return sorted[ceil_count(sorted.size(), p) - 1];
}

double upper_quantile(std::span<const double> sorted, double p) {
  check_probability(p);
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  return sorted[sorted.size() - ceil_count(sorted.size(), p)];
}

double sorted_median(std::span<const double> sorted) {
  if (sorted.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double median(std::span<const double> values) {
  std::vector<double> copy(values.begin(), values.end());
  std::sort(copy.begin(), copy.end());
  return sorted_median(copy);
}

double mad(std::span<const double> values) {
  const double med = median(values);
  std::vector<double> dev(values.size());
  std::transform(values.begin(), values.end(), dev.begin(), [med](double v) { return std::abs(v - med); });
  return median(dev);
}

RegionFamily1D::RegionFamily1D(RegionFlavor flavor, std::vector<double> sample)
    : flavor_(flavor), sorted_(std::move(sample)) {
  if (sorted_.empty()) throw std::invalid_argument("region family needs a nonempty sample");
  std::sort(sorted_.begin(), sorted_.end());
  median_ = sorted_median(sorted_);
  if (flavor_ == RegionFlavor::Projection) {
    std::vector<double> dev(sorted_.size());
    std::transform(sorted_.begin(), sorted_.end(), dev.begin(), [this](double v) { return std::abs(v - median_); });
    std::sort(dev.begin(), dev.end());
    mad_ = sorted_median(dev);
  }
  if (flavor_ == RegionFlavor::Zonoid) {
    prefix_.resize(sorted_.size() + 1, 0.0);
    for (std::size_t k = 0; k < sorted_.size(); ++k) prefix_[k + 1] = prefix_[k] + sorted_[k];
  }
}

double RegionFamily1D::mean() const noexcept {
  if (!prefix_.empty()) return prefix_.back() / static_cast<double>(sorted_.size());
  double s = 0.0;
  for (double v : sorted_) s += v;
  return s / static_cast<double>(sorted_.size());
}

double RegionFamily1D::lower_tail_mean(double alpha) const noexcept {
  const std::size_t n = sorted_.size();
  const double nd = static_cast<double>(n);
  // Largest m with m/n <= alpha.
  std::size_t m = std::min(n, static_cast<std::size_t>(std::floor(alpha * nd)));
  while (m > 0 && static_cast<double>(m) / nd > alpha) --m;
  while (m < n && static_cast<double>(m + 1) / nd <= alpha) ++m;
  double integral = prefix_[m] / nd;
  if (m < n) integral += (alpha - static_cast<double>(m) / nd) * sorted_[m];
  return integral / alpha;
}

double RegionFamily1D::upper_tail_mean(double alpha) const noexcept {
  const std::size_t n = sorted_.size();
  const double nd = static_cast<double>(n);
  std::size_t m = std::min(n, static_cast<std::size_t>(std::floor(alpha * nd)));
  while (m > 0 && static_cast<double>(m) / nd > alpha) --m;
  while (m < n && static_cast<double>(m + 1) / nd <= alpha) ++m;
  double integral = (prefix_[n] - prefix_[n - m]) / nd;
  if (m < n) integral += (alpha - static_cast<double>(m) / nd) * sorted_[n - m - 1];
  return integral / alpha;
}

Interval RegionFamily1D::region(double alpha) const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("region level alpha must lie in (0, 1]");
  const std::size_t n = sorted_.size();
  Interval out;
  switch (flavor_) {
    case RegionFlavor::Tukey: {
      const std::size_t k = std::max<std::size_t>(1, ceil_count(n, alpha));
      out.lower = sorted_[k - 1];
      out.upper = sorted_[n - k];
      break;
    }
    case RegionFlavor::Zonoid:
      out.lower = lower_tail_mean(alpha);
      out.upper = upper_tail_mean(alpha);
      break;
    case RegionFlavor::Projection: {
      const double c = (1.0 - alpha) / alpha;
      out.lower = median_ - c * mad_;
      out.upper = median_ + c * mad_;
      break;
    }
  }
  out.empty = out.lower > out.upper;
  return out;
}

double RegionFamily1D::depth(double z) const noexcept {
  switch (flavor_) {
    case RegionFlavor::Tukey:
      return tukey_depth(z);
    case RegionFlavor::Zonoid:
      return zonoid_depth(z);
    case RegionFlavor::Projection:
      return projection_depth(z);
  }
  return 0.0;
}

double RegionFamily1D::tukey_depth(double z) const noexcept {
  // z lies in [Q(alpha), Qbar(alpha)] iff both F_n(z) >= alpha and
  // #{x >= z}/n >= alpha, so the sup is the smaller of the two fractions.
  const auto below = std::upper_bound(sorted_.begin(), sorted_.end(), z) - sorted_.begin();
  const auto above = sorted_.end() - std::lower_bound(sorted_.begin(), sorted_.end(), z);
  return static_cast<double>(std::min(below, above)) / static_cast<double>(sorted_.size());
}

double RegionFamily1D::projection_depth(double z) const noexcept {
  if (mad_ == 0.0) return z == median_ ? 1.0 : 0.0;
  return 1.0 / (1.0 + std::abs(z - median_) / mad_);
}

double RegionFamily1D::lower_tail_sup(double z) const noexcept {
  const std::size_t n = sorted_.size();
  const double nd = static_cast<double>(n);
  // The breakpoint means S_k / k are non-decreasing in k; find the largest
  // k with S_k / k <= z by bisection (k = 1 always qualifies here).
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (prefix_[mid] / static_cast<double>(mid) <= z) lo = mid;
    else hi = mid - 1;
  }
  const std::size_t k = lo;
  if (k == n) return 1.0;
  // On (k/n, (k+1)/n] the tail integral is linear; solve I(alpha) = z alpha.
  const double next = sorted_[k];
  const double alpha = (static_cast<double>(k) * next - prefix_[k]) / (nd * (next - z));
  return std::clamp(alpha, static_cast<double>(k) / nd, static_cast<double>(k + 1) / nd);
}

double RegionFamily1D::upper_tail_sup(double z) const noexcept {
  const std::size_t n = sorted_.size();
  const double nd = static_cast<double>(n);
  auto top = [&](std::size_t k) { return prefix_[n] - prefix_[n - k]; };
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (top(mid) / static_cast<double>(mid) >= z) lo = mid;
    else hi = mid - 1;
  }
  const std::size_t k = lo;
  if (k == n) return 1.0;
  const double next = sorted_[n - k - 1];
  const double alpha = (top(k) - static_cast<double>(k) * next) / (nd * (z - next));
  return std::clamp(alpha, static_cast<double>(k) / nd, static_cast<double>(k + 1) / nd);
}

double RegionFamily1D::zonoid_depth(double z) const noexcept {
  if (z < sorted_.front() || z > sorted_.back()) return 0.0;
  return std::min(lower_tail_sup(z), upper_tail_sup(z));
}

}  // namespace depthlab
