#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace depthlab {

enum class DepthMethod { Euclidean, Mahalanobis, Projection, Tukey, Zonoid, LP, Local, StudentLS };

std::string_view to_string(DepthMethod m) noexcept;
/// Case-insensitive; throws std::invalid_argument on an unknown name.
DepthMethod parse_depth_method(std::string_view name);

enum class WeightFlavor {
  Affine,  // w(x) = a + b x
  Power,   // w(x) = x^exponent
};

/// Weight function for the weighted L^p depth and the depth-weighted
/// location/scatter estimator.
struct WeightFunction {
  WeightFlavor flavor = WeightFlavor::Affine;
  double a = 0.0;
  double b = 1.0;
  double exponent = 1.0;

  double operator()(double x) const noexcept;
  void validate() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20140214;
inline constexpr std::size_t kDefaultProjections = 1000;

struct MethodDescriptor {
  DepthMethod kind = DepthMethod::Projection;
  double p = 2.0;
  double beta = 0.5;
  std::size_t nproj = kDefaultProjections;
  std::uint64_t seed = kDefaultSeed;
  WeightFunction weight{};
  /// Global depth localized when kind == Local.
  DepthMethod local_base = DepthMethod::Projection;

  /// Throws std::invalid_argument when p < 1, beta outside (0,1], nproj == 0
  /// or the local base is itself Local.
  void validate() const;

  /// Same descriptor with a different kind (parameters and seed kept).
  MethodDescriptor with_kind(DepthMethod k) const {
    MethodDescriptor m = *this;
    m.kind = k;
    return m;
  }
};

}  // namespace depthlab
