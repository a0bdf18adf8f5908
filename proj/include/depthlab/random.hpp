#pragma once

#include <array>
#include <cstdint>

namespace depthlab {

/// Counter-based generator (Philox4x32-10) keyed by (seed, stream).
///
/// Every stream is an independent, reproducible sequence: the i-th output of
/// stream s depends only on (seed, s, i), never on what other streams or
/// threads have drawn. Parallel code gives each work item its own stream.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform() noexcept;
  /// Standard normal via Box-Muller; platform independent.
  double normal() noexcept;
  /// Uniform integer in [0, bound), bound > 0 (Lemire rejection).
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  unsigned used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

/// Stream-id bases. Each consumer of a seed draws from its own disjoint
/// block of streams so that, e.g., projection directions never share
/// random numbers with bootstrap resamples.
namespace streams {
inline constexpr std::uint64_t kSphere = 0;
inline constexpr std::uint64_t kBootstrap = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kNormalSample = std::uint64_t{2} << 40;
inline constexpr std::uint64_t kUser = std::uint64_t{3} << 40;
}  // namespace streams

/// Philox4x32-10 block function, exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

}  // namespace depthlab
