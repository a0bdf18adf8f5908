#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace depthlab {

/// Smallest k with k/n >= fraction, clamped to [0, n]. Evaluates the
/// comparison itself instead of trusting ceil(n * fraction), which rounds
/// the wrong way for products like 10 * 0.3.
std::size_t ceil_count(std::size_t n, double fraction) noexcept;

/// min{x : F_n(x) >= p} over a sorted sample; p in (0,1).
double lower_quantile(std::span<const double> sorted, double p);
/// max{x : #{x_i >= x}/n >= p} over a sorted sample; p in (0,1).
double upper_quantile(std::span<const double> sorted, double p);

/// Median of a sorted sample; mean of the two central order statistics when
/// n is even.
double sorted_median(std::span<const double> sorted);
/// Copies and sorts.
double median(std::span<const double> values);
/// Median absolute deviation about the median, no consistency constant.
double mad(std::span<const double> values);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = false;

  bool contains(double z) const noexcept { return !empty && lower <= z && z <= upper; }
  /// True when *this is a subset of other (the empty interval is a subset of
  /// anything).
  bool within(const Interval& other) const noexcept {
    return empty || (!other.empty && other.lower <= lower && upper <= other.upper);
  }
};

enum class RegionFlavor { Tukey, Zonoid, Projection };

/// Univariate central regions Z_alpha of one sample:
///   Tukey       [Q(alpha), Qbar(alpha)]
///   Zonoid      [(1/alpha) int_0^alpha Q, (1/alpha) int_0^alpha Qbar]
///   Projection  [med - c MAD, med + c MAD], c = (1 - alpha)/alpha
/// and the depth they induce, sup{alpha : z in Z_alpha}.
class RegionFamily1D {
 public:
  RegionFamily1D(RegionFlavor flavor, std::vector<double> sample);

  RegionFlavor flavor() const noexcept { return flavor_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  double median() const noexcept { return median_; }
  double mad() const noexcept { return mad_; }
  double mean() const noexcept;

  /// alpha in (0, 1]; throws std::invalid_argument otherwise.
  Interval region(double alpha) const;
  double depth(double z) const noexcept;

 private:
  double tukey_depth(double z) const noexcept;
  double zonoid_depth(double z) const noexcept;
  double projection_depth(double z) const noexcept;
  // (1/alpha) int_0^alpha Q(p) dp, exact for the empirical quantile function.
  double lower_tail_mean(double alpha) const noexcept;
  double upper_tail_mean(double alpha) const noexcept;
  // sup{alpha : lower_tail_mean(alpha) <= z}, assuming min <= z.
  double lower_tail_sup(double z) const noexcept;
  double upper_tail_sup(double z) const noexcept;

  RegionFlavor flavor_;
  std::vector<double> sorted_;
  std::vector<double> prefix_;  // zonoid only: prefix_[k] = sum of the k smallest values
  double median_ = 0.0;
  double mad_ = 0.0;
};

}  // namespace depthlab
