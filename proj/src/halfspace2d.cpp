#include "depthlab/halfspace2d.hpp"

#include <algorithm>
#include <vector>

namespace depthlab {

namespace {

inline int half(const Vec2& v) { return (v[1] < 0.0 || (v[1] == 0.0 && v[0] < 0.0)) ? 1 : 0; }
inline double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

bool angle_less(const Vec2& a, const Vec2& b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0.0;
}

bool same_direction(const Vec2& a, const Vec2& b) { return cross(a, b) == 0.0 && dot(a, b) > 0.0; }

// Angle from a to b (counter-clockwise) lies in [0, pi).
bool in_half_open_semicircle(const Vec2& a, const Vec2& b) {
  const double c = cross(a, b);
  return c > 0.0 || (c == 0.0 && dot(a, b) > 0.0);
}

}  // namespace

std::size_t min_closed_halfplane_count(std::span<const Vec2> vectors) {
  std::size_t at_origin = 0;
  std::vector<Vec2> dirs;
  dirs.reserve(vectors.size());
  for (const Vec2& v : vectors) {
    if (v[0] == 0.0 && v[1] == 0.0) ++at_origin;
    else dirs.push_back(v);
  }
  const std::size_t m = dirs.size();
  if (m == 0) return at_origin;

  std::sort(dirs.begin(), dirs.end(), angle_less);

  // Largest number of directions with angle in [theta_i, theta_i + pi) over
  // starting directions i; an open half-circle just before theta_i holds the
  // same set. Only the first member of each equal-angle group is a start.
  std::size_t best = 0;
  std::size_t j = 0;  // exclusive end in the doubled index space
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && same_direction(dirs[i - 1], dirs[i])) continue;
    if (j < i + 1) j = i + 1;
    while (j < i + m && in_half_open_semicircle(dirs[i], dirs[j % m])) ++j;
    best = std::max(best, j - i);
  }
  return at_origin + (m - best);
}

}  // namespace depthlab
