#include "viscofrac/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace viscofrac {
namespace {

struct Tri {
  int a, b, c;
  bool alive = true;
};

// > 0 when p lies inside the circumcircle of (a,b,c), which must be CCW.
double incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
  const double ax = a.x - p.x, ay = a.y - p.y;
  const double bx = b.x - p.x, by = b.y - p.y;
  const double cx = c.x - p.x, cy = c.y - p.y;
  const double a2 = ax * ax + ay * ay;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

struct Edge {
  int u, v;
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};
Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool proper_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = orient2(c, d, a);
  const double d2 = orient2(c, d, b);
  const double d3 = orient2(a, b, c);
  const double d4 = orient2(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Delaunay-style triangulation of a pseudo-polygon against base edge (a, b).
// `chain` holds the boundary vertices strictly between a and b, ordered.
void fill_pseudo(const std::vector<Vec2>& pts, int a, int b, std::vector<int> chain,
                 std::vector<std::array<int, 3>>& out) {
  if (chain.empty()) return;
  std::size_t ci = 0;
  if (chain.size() > 1) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < chain.size() && ok; ++j) {
        if (j == i) continue;
        const Vec2& pa = pts[static_cast<std::size_t>(a)];
        const Vec2& pb = pts[static_cast<std::size_t>(b)];
        const Vec2& pc = pts[static_cast<std::size_t>(chain[i])];
        if (orient2(pa, pb, pc) > 0) {
          if (incircle(pa, pb, pc, pts[static_cast<std::size_t>(chain[j])]) > 0) ok = false;
        } else {
          if (incircle(pa, pc, pb, pts[static_cast<std::size_t>(chain[j])]) > 0) ok = false;
        }
      }
      if (ok) { ci = i; break; }
    }
  }
  const int c = chain[ci];
  out.push_back({a, b, c});
  fill_pseudo(pts, a, c, std::vector<int>(chain.begin(), chain.begin() + static_cast<long>(ci)), out);
  fill_pseudo(pts, c, b, std::vector<int>(chain.begin() + static_cast<long>(ci) + 1, chain.end()), out);
}

}  // namespace

Triangulation constrained_delaunay(const std::vector<Vec2>& points,
                                   const std::vector<std::array<int, 2>>& segments) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw std::invalid_argument("triangulation: need at least 3 points");

  // Bounding super-triangle.
  Vec2 lo = points[0], hi = points[0];
  for (const auto& p : points) {
    lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
  }
  const double span = std::max(hi.x - lo.x, hi.y - lo.y) + 1.0;
  const Vec2 mid = (lo + hi) * 0.5;
  std::vector<Vec2> pts = points;
  pts.push_back({mid.x - 20.0 * span, mid.y - 10.0 * span});
  pts.push_back({mid.x + 20.0 * span, mid.y - 10.0 * span});
  pts.push_back({mid.x, mid.y + 20.0 * span});

  std::vector<Tri> tris;
  tris.push_back({n, n + 1, n + 2, true});

  std::vector<int> cavity;
  std::vector<std::pair<int, int>> boundary;
  for (int ip = 0; ip < n; ++ip) {
    const Vec2& p = pts[static_cast<std::size_t>(ip)];
    cavity.clear();
    for (int it = 0; it < static_cast<int>(tris.size()); ++it) {
      const Tri& t = tris[static_cast<std::size_t>(it)];
      if (!t.alive) continue;
      if (incircle(pts[static_cast<std::size_t>(t.a)], pts[static_cast<std::size_t>(t.b)],
                   pts[static_cast<std::size_t>(t.c)], p) > -1e-14)
        cavity.push_back(it);
    }
    // boundary = edges of the cavity used exactly once
    std::map<Edge, std::pair<int, int>> count;  // edge -> (count, directed first use)
    for (int it : cavity) {
      const Tri& t = tris[static_cast<std::size_t>(it)];
      const int vs[3] = {t.a, t.b, t.c};
      for (int k = 0; k < 3; ++k) {
        const int u = vs[k], v = vs[(k + 1) % 3];
        auto [pos, fresh] = count.emplace(make_edge(u, v), std::make_pair(0, 0));
        pos->second.first++;
        if (fresh) pos->second.second = (u < v) ? 1 : -1;
      }
    }
    boundary.clear();
    for (const auto& [e, cnt] : count)
      if (cnt.first == 1)
        boundary.push_back(cnt.second > 0 ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u));
    for (int it : cavity) tris[static_cast<std::size_t>(it)].alive = false;
    for (const auto& [u, v] : boundary) tris.push_back({u, v, ip, true});
  }

  // Compact, drop super-triangle fans.
  std::vector<std::array<int, 3>> live;
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    if (t.a >= n || t.b >= n || t.c >= n) continue;
    live.push_back({t.a, t.b, t.c});
  }
  // globally normalize orientation
  for (auto& t : live) {
    if (orient2(points[static_cast<std::size_t>(t[0])], points[static_cast<std::size_t>(t[1])],
                points[static_cast<std::size_t>(t[2])]) < 0)
      std::swap(t[1], t[2]);
  }

  // Constraint recovery by pipe removal and pseudo-polygon refill.
  for (const auto& seg : segments) {
    const int sa = seg[0], sb = seg[1];
    bool present = false;
    for (const auto& t : live) {
      for (int k = 0; k < 3 && !present; ++k) {
        const int u = t[static_cast<std::size_t>(k)], v = t[static_cast<std::size_t>((k + 1) % 3)];
        if ((u == sa && v == sb) || (u == sb && v == sa)) present = true;
      }
      if (present) break;
    }
    if (present) continue;

    const Vec2& A = points[static_cast<std::size_t>(sa)];
    const Vec2& B = points[static_cast<std::size_t>(sb)];
    std::vector<std::array<int, 3>> keep, removed;
    for (const auto& t : live) {
      bool crossed = false;
      for (int k = 0; k < 3; ++k) {
        const int u = t[static_cast<std::size_t>(k)], v = t[static_cast<std::size_t>((k + 1) % 3)];
        if (u == sa || u == sb || v == sa || v == sb) continue;
        if (proper_cross(A, B, points[static_cast<std::size_t>(u)], points[static_cast<std::size_t>(v)]))
          crossed = true;
      }
      (crossed ? removed : keep).push_back(t);
    }
    if (removed.empty())
      throw std::runtime_error("triangulation: constraint recovery found no crossing pipe");

    // Cavity boundary edges, split by side of the segment.
    std::map<Edge, int> count;
    for (const auto& t : removed)
      for (int k = 0; k < 3; ++k)
        count[make_edge(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % 3)])]++;
    std::map<int, std::vector<int>> adj_left, adj_right;
    for (const auto& [e, c] : count) {
      if (c != 1) continue;
      const Vec2 m = (points[static_cast<std::size_t>(e.u)] + points[static_cast<std::size_t>(e.v)]) * 0.5;
      auto& adj = orient2(A, B, m) > 0 ? adj_left : adj_right;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    auto walk = [&](std::map<int, std::vector<int>>& adj) {
      std::vector<int> chain;
      int prev = -1, cur = sa;
      while (cur != sb) {
        const auto it = adj.find(cur);
        if (it == adj.end()) throw std::runtime_error("triangulation: broken cavity chain");
        int nxt = -1;
        for (int cand : it->second)
          if (cand != prev) { nxt = cand; break; }
        if (nxt < 0) throw std::runtime_error("triangulation: dead-end cavity chain");
        if (nxt != sb) chain.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      return chain;
    };
    std::vector<std::array<int, 3>> fill;
    fill_pseudo(points, sa, sb, walk(adj_left), fill);
    fill_pseudo(points, sa, sb, walk(adj_right), fill);
    for (auto& t : fill) {
      if (orient2(points[static_cast<std::size_t>(t[0])], points[static_cast<std::size_t>(t[1])],
                  points[static_cast<std::size_t>(t[2])]) < 0)
        std::swap(t[1], t[2]);
      keep.push_back(t);
    }
    live.swap(keep);
  }

  Triangulation out;
  out.tris = std::move(live);
  return out;
}

}  // namespace viscofrac
