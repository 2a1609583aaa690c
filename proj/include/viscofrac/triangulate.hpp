#pragma once

#include <array>
#include <vector>

#include "viscofrac/geometry.hpp"

namespace viscofrac {

/// Constrained Delaunay triangulation of a point set: Bowyer-Watson insertion
/// followed by cavity-based recovery of the constraint segments. Constraint
/// segments must connect input points and may not pass through other input
/// points. Triangles are returned with counterclockwise orientation.
struct Triangulation {
  std::vector<std::array<int, 3>> tris;
};

Triangulation constrained_delaunay(const std::vector<Vec2>& points,
                                   const std::vector<std::array<int, 2>>& segments);

}  // namespace viscofrac
