#pragma once

#include <stdexcept>
#include <vector>

#include "viscofrac/geometry.hpp"

namespace viscofrac {

/// Simple polygon with a Dirichlet/Neumann label per boundary edge.
/// Edge i runs from vertex i to vertex (i+1) mod n.
struct DomainSpec {
  std::vector<Vec2> poly;            // counterclockwise
  std::vector<bool> dirichlet_edge;  // size == poly.size()

  std::size_t edge_count() const { return poly.size(); }
  Vec2 edge_a(std::size_t i) const { return poly[i]; }
  Vec2 edge_b(std::size_t i) const { return poly[(i + 1) % poly.size()]; }

  bool contains(const Vec2& p) const;
  double boundary_distance(const Vec2& p) const;
  /// Index of the boundary edge nearest to p, with the distance.
  std::size_t nearest_edge(const Vec2& p, double* dist_out = nullptr) const;
  void validate() const;  // simple polygon, labels complete

  static DomainSpec unit_square(bool all_dirichlet = false);
  static DomainSpec rectangle(Vec2 lo, Vec2 hi, bool all_dirichlet = false);
};

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

}  // namespace viscofrac
