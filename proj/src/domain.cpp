#include "viscofrac/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace viscofrac {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 < 1e-30) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = orient2(c, d, a);
  const double d2 = orient2(c, d, b);
  const double d3 = orient2(a, b, c);
  const double d4 = orient2(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  auto on = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    return std::min(p.x, r.x) - 1e-14 <= q.x && q.x <= std::max(p.x, r.x) + 1e-14 &&
           std::min(p.y, r.y) - 1e-14 <= q.y && q.y <= std::max(p.y, r.y) + 1e-14;
  };
  if (d1 == 0 && on(c, a, d)) return true;
  if (d2 == 0 && on(c, b, d)) return true;
  if (d3 == 0 && on(a, c, b)) return true;
  if (d4 == 0 && on(a, d, b)) return true;
  return false;
}

bool DomainSpec::contains(const Vec2& p) const {
  // Crossing count against edges.
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& pi = poly[i];
    const Vec2& pj = poly[j];
    if ((pi.y > p.y) != (pj.y > p.y)) {
      const double xint = pj.x + (p.y - pj.y) / (pi.y - pj.y) * (pi.x - pj.x);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

double DomainSpec::boundary_distance(const Vec2& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < edge_count(); ++i)
    best = std::min(best, point_segment_distance(p, edge_a(i), edge_b(i)));
  return best;
}

std::size_t DomainSpec::nearest_edge(const Vec2& p, double* dist_out) const {
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < edge_count(); ++i) {
    const double d = point_segment_distance(p, edge_a(i), edge_b(i));
    if (d < best) { best = d; arg = i; }
  }
  if (dist_out) *dist_out = best;
  return arg;
}

void DomainSpec::validate() const {
  if (poly.size() < 3) throw std::invalid_argument("domain: polygon needs >= 3 vertices");
  if (dirichlet_edge.size() != poly.size())
    throw std::invalid_argument("domain: one boundary label needed per edge");
  const std::size_t n = poly.size();
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) area2 += cross(edge_a(i), edge_b(i));
  if (area2 <= 0.0) throw std::invalid_argument("domain: polygon must be counterclockwise");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(edge_a(i), edge_b(i), edge_a(j), edge_b(j)))
        throw std::invalid_argument("domain: polygon is not simple");
    }
}

DomainSpec DomainSpec::unit_square(bool all_dirichlet) {
  return rectangle({0, 0}, {1, 1}, all_dirichlet);
}

DomainSpec DomainSpec::rectangle(Vec2 lo, Vec2 hi, bool all_dirichlet) {
  DomainSpec d;
  d.poly = {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
  d.dirichlet_edge.assign(4, all_dirichlet);
  return d;
}

}  // namespace viscofrac
