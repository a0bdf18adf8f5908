#pragma once

#include <span>
#include <vector>

#include "depthlab/halfspace2d.hpp"

namespace depthlab {

/// Convex hull in counter-clockwise order without collinear vertices
/// (Andrew's monotone chain). Fewer than three distinct points come back
/// as-is (deduplicated).
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Shoelace area of a simple polygon (absolute value).
double polygon_area(std::span<const Vec2> polygon);

/// Point-in-convex-polygon test, boundary inclusive. The polygon must be
/// counter-clockwise as returned by convex_hull.
bool hull_contains(std::span<const Vec2> hull, const Vec2& p);

}  // namespace depthlab
