#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace depthlab {

using Vec2 = std::array<double, 2>;

/// min over u != 0 of #{i : u . v_i >= 0}.
///
/// Zero vectors lie in every closed halfplane and always count. The nonzero
/// vectors are sorted by angle and a two-pointer sweep finds the largest
/// number of them inside one open half-circle, which is the complement of
/// the best closed halfplane. Angular comparisons use cross products rather
/// than atan2 so that exactly collinear vectors are classified exactly.
/// O(n log n).
std::size_t min_closed_halfplane_count(std::span<const Vec2> vectors);

}  // namespace depthlab
