#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace depthlab {

/// nproj unit directions in R^d. Direction i is drawn from RNG stream i, so a
/// set built with fewer directions is a prefix of one built with more.
class ProjectionSet {
 public:
  ProjectionSet(std::size_t dim, std::size_t count, std::uint64_t seed);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return count_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::span<const double> direction(std::size_t i) const noexcept {
    return {directions_.data() + i * dim_, dim_};
  }

  /// u_i^T x for a point x of dimension dim().
  double project(std::size_t i, std::span<const double> x) const noexcept;

 private:
  std::size_t dim_;
  std::size_t count_;
  std::uint64_t seed_;
  std::vector<double> directions_;
};

/// Uniform directions on S^{d-1} from normalized Gaussian draws.
ProjectionSet sample_sphere(std::size_t dim, std::size_t count, std::uint64_t seed);

}  // namespace depthlab
