#include "viscofrac/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "viscofrac/triangulate.hpp"

namespace viscofrac {
namespace {

constexpr double kDupTol = 1e-12;

bool left_of_corner(const Vec2& prev, const Vec2& v, const Vec2& next, const Vec2& p) {
  const bool convex = orient2(prev, v, next) >= 0.0;
  const double s1 = orient2(prev, v, p);
  const double s2 = orient2(v, next, p);
  return convex ? (s1 > 0.0 && s2 > 0.0) : (s1 > 0.0 || s2 > 0.0);
}

// Duplicate the chain node into plus/minus copies; triangles right of the
// walking direction are re-pointed at the minus copy.
void split_chain_node(CrackedMesh& m, std::size_t ci, const Vec2& prev_pt, const Vec2& next_pt) {
  auto& cn = m.chain[ci];
  if (cn.split()) return;
  const int v = cn.plus;
  const Vec2 pv = m.X[static_cast<std::size_t>(v)];
  const int w = static_cast<int>(m.X.size());
  m.X.push_back(pv);
  for (std::size_t e = 0; e < m.tri.size(); ++e) {
    auto& t = m.tri[e];
    if (t[0] != v && t[1] != v && t[2] != v) continue;
    if (!left_of_corner(prev_pt, pv, next_pt, m.centroid(e)))
      for (int k = 0; k < 3; ++k)
        if (t[static_cast<std::size_t>(k)] == v) t[static_cast<std::size_t>(k)] = w;
  }
  cn.minus = w;
}

void retag_sides(CrackedMesh& m) {
  std::map<int, signed char> node_side;
  for (const auto& cn : m.chain)
    if (cn.split()) {
      node_side[cn.plus] = +1;
      node_side[cn.minus] = -1;
    }
  m.tri_side.assign(m.tri.size(), 0);
  for (std::size_t e = 0; e < m.tri.size(); ++e)
    for (int k = 0; k < 3; ++k) {
      const auto it = node_side.find(m.tri[e][static_cast<std::size_t>(k)]);
      if (it != node_side.end()) {
        m.tri_side[e] = it->second;
        break;
      }
    }
}

// > 0 when p is inside the circumcircle of CCW triangle (a,b,c)
double incircle_det(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
  const double ax = a.x - p.x, ay = a.y - p.y;
  const double bx = b.x - p.x, by = b.y - p.y;
  const double cx = c.x - p.x, cy = c.y - p.y;
  const double a2 = ax * ax + ay * ay;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

double hash_jitter(std::size_t ix, std::size_t iy, unsigned salt) {
  std::size_t h = ix * 0x9e3779b97f4a7c15ull ^ (iy + salt) * 0xbf58476d1ce4e5b9ull;
  h ^= h >> 31;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 29;
  return (static_cast<double>(h & 0xffffffull) / double(0x1000000) - 0.5);
}

struct EdgeKey {
  int u, v;
  bool operator<(const EdgeKey& o) const { return u != o.u ? u < o.u : v < o.v; }
};
EdgeKey ekey(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

}  // namespace

double CrackedMesh::min_angle_off_tip() const {
  const int tipn = tip_node();
  double worst = 180.0;
  for (std::size_t e = 0; e < tri.size(); ++e) {
    const auto& t = tri[e];
    if (t[0] == tipn || t[1] == tipn || t[2] == tipn) continue;
    for (int k = 0; k < 3; ++k) {
      const Vec2& a = X[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
      const Vec2& b = X[static_cast<std::size_t>(t[static_cast<std::size_t>((k + 1) % 3)])];
      const Vec2& c = X[static_cast<std::size_t>(t[static_cast<std::size_t>((k + 2) % 3)])];
      const Vec2 u = b - a, v = c - a;
      const double ang = std::atan2(std::abs(cross(u, v)), dot(u, v)) * 180.0 / M_PI;
      worst = std::min(worst, ang);
    }
  }
  return worst;
}

void CrackedMesh::audit_or_throw() const {
  for (std::size_t e = 0; e < tri.size(); ++e)
    if (!(area(e) > 1e-12 * h * h))
      throw std::runtime_error("mesh audit: degenerate or misoriented triangle");
  for (const auto& cn : chain) {
    const bool should_split = cn.s < s_crack - kDupTol;
    if (should_split && !cn.split())
      throw std::runtime_error("mesh audit: crack node not duplicated");
    if (!should_split && cn.split())
      throw std::runtime_error("mesh audit: node beyond the tip is duplicated");
    if (cn.split())
      for (std::size_t e = 0; e < tri.size(); ++e) {
        const auto& t = tri[e];
        bool hasp = false, hasm = false;
        for (int k = 0; k < 3; ++k) {
          hasp |= t[static_cast<std::size_t>(k)] == cn.plus;
          hasm |= t[static_cast<std::size_t>(k)] == cn.minus;
        }
        if (hasp && hasm)
          throw std::runtime_error("mesh audit: triangle bridges the crack");
      }
  }
}

CrackedMesh build_cracked_mesh(const DomainSpec& domain, const CrackPath& path,
                               double s_crack, double h, double s_ahead) {
  if (s_ahead < s_crack) s_ahead = s_crack;
  if (s_crack < path.a0() - 1e-12 || s_ahead > path.b() + 1e-12)
    throw std::invalid_argument("build_cracked_mesh: crack range outside the path");
  s_crack = std::clamp(s_crack, path.a0(), path.b());
  s_ahead = std::clamp(s_ahead, s_crack, path.b());

  std::vector<Vec2> pts;
  std::vector<std::array<int, 2>> segs;
  std::set<EdgeKey> constrained;
  auto add_seg = [&](int a, int b) {
    segs.push_back({a, b});
    constrained.insert(ekey(a, b));
  };

  const Vec2 mouth = path.eval(path.a0());

  // polygon corners
  const std::size_t ncorner = domain.poly.size();
  for (const auto& c : domain.poly) pts.push_back(c);

  // boundary subdivision, forcing the crack mouth onto its edge
  std::vector<std::array<int, 2>> dirichlet_segs;
  int mouth_idx = -1;
  for (std::size_t ei = 0; ei < ncorner; ++ei) {
    const Vec2 a = domain.edge_a(ei);
    const Vec2 b = domain.edge_b(ei);
    const int ia = static_cast<int>(ei);
    const int ib = static_cast<int>((ei + 1) % ncorner);
    std::vector<double> knots;  // parameters in (0,1) of forced points
    const double dmouth = point_segment_distance(mouth, a, b);
    double tm = -1.0;
    if (dmouth < 1e-9) {
      tm = dot(mouth - a, b - a) / (b - a).norm2();
      if (tm > 1e-9 && tm < 1.0 - 1e-9) knots.push_back(tm);
      else tm = -1.0;
    }
    knots.push_back(1.0);
    int prev = ia;
    double t0k = 0.0;
    for (double tk : knots) {
      const int pieces = std::max(1, static_cast<int>(std::ceil((tk - t0k) * (b - a).norm() / h)));
      for (int k = 1; k <= pieces; ++k) {
        const double t = t0k + (tk - t0k) * k / pieces;
        int idx;
        if (k == pieces && tk == 1.0) {
          idx = ib;
        } else {
          idx = static_cast<int>(pts.size());
          pts.push_back(a + t * (b - a));
          if (k == pieces && tk == tm) mouth_idx = idx;
        }
        add_seg(prev, idx);
        if (domain.dirichlet_edge[ei]) dirichlet_segs.push_back({prev, idx});
        prev = idx;
      }
      t0k = tk;
    }
    if (tm < 0.0 && dmouth < 1e-9 && mouth_idx < 0) {
      // mouth coincides with a corner
      if (dist(mouth, a) < 1e-9) mouth_idx = ia;
      if (dist(mouth, b) < 1e-9) mouth_idx = ib;
    }
  }
  if (mouth_idx < 0) {
    double dm = domain.boundary_distance(mouth);
    throw std::invalid_argument("build_cracked_mesh: crack mouth not on the boundary (dist " +
                                std::to_string(dm) + ")");
  }

  // crack chain subdivision: behind the tip, then ahead along the path
  const double hc = 0.75 * h;
  std::vector<double> chain_arcs;
  std::vector<int> chain_ids;
  chain_arcs.push_back(path.a0());
  chain_ids.push_back(mouth_idx);
  const double behind = s_crack - path.a0();
  if (behind > 1e-12) {
    const int nb = std::max(1, static_cast<int>(std::ceil(behind / hc)));
    for (int k = 1; k <= nb; ++k) chain_arcs.push_back(path.a0() + behind * k / nb);
  }
  const std::size_t tip_pos = chain_arcs.size() - 1;
  const double ahead = s_ahead - s_crack;
  if (ahead > 1e-12) {
    const int na = std::max(1, static_cast<int>(std::ceil(ahead / hc)));
    for (int k = 1; k <= na; ++k) chain_arcs.push_back(s_crack + ahead * k / na);
  }
  for (std::size_t k = 1; k < chain_arcs.size(); ++k) {
    const int idx = static_cast<int>(pts.size());
    pts.push_back(path.eval(chain_arcs[k]));
    chain_ids.push_back(idx);
    add_seg(chain_ids[k - 1], idx);
  }

  // local spacing per constraint segment, for lattice culling
  std::vector<double> seg_len(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i)
    seg_len[i] = dist(pts[static_cast<std::size_t>(segs[i][0])],
                      pts[static_cast<std::size_t>(segs[i][1])]);

  // interior lattice (hex-ish, jittered)
  Vec2 lo = domain.poly[0], hi = domain.poly[0];
  for (const auto& p : domain.poly) {
    lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
  }
  const double hs = 0.92 * h;
  const double ry = hs * 0.8660254037844386;
  std::size_t iy = 0;
  for (double y = lo.y + 0.55 * ry; y < hi.y; y += ry, ++iy) {
    const double off = (iy % 2 == 0) ? 0.0 : 0.5 * hs;
    std::size_t ix = 0;
    for (double x = lo.x + 0.5 * hs + off; x < hi.x; x += hs, ++ix) {
      Vec2 p{x + 0.08 * hs * hash_jitter(ix, iy, 1),
             y + 0.08 * hs * hash_jitter(ix, iy, 2)};
      if (!domain.contains(p)) continue;
      if (domain.boundary_distance(p) < 0.45 * h) continue;
      bool near = false;
      for (std::size_t i = 0; i < segs.size() && !near; ++i) {
        const double cl = 0.62 * std::min(seg_len[i], h);
        if (point_segment_distance(p, pts[static_cast<std::size_t>(segs[i][0])],
                                   pts[static_cast<std::size_t>(segs[i][1])]) < cl)
          near = true;
      }
      if (!near) pts.push_back(p);
    }
  }

  Triangulation T = constrained_delaunay(pts, segs);

  // keep interior triangles only
  std::vector<std::array<int, 3>> tris;
  for (const auto& t : T.tris) {
    const Vec2 c = (pts[static_cast<std::size_t>(t[0])] + pts[static_cast<std::size_t>(t[1])] +
                    pts[static_cast<std::size_t>(t[2])]) * (1.0 / 3.0);
    if (domain.contains(c)) tris.push_back(t);
  }

  std::vector<bool> fixed(pts.size(), false);
  for (const auto& s : segs) { fixed[static_cast<std::size_t>(s[0])] = true; fixed[static_cast<std::size_t>(s[1])] = true; }

  // Laplacian smoothing of free nodes, guarded against inversion
  for (int sweep = 0; sweep < 3; ++sweep) {
    std::vector<Vec2> acc(pts.size());
    std::vector<int> cnt(pts.size(), 0);
    for (const auto& t : tris)
      for (int k = 0; k < 3; ++k) {
        const int u = t[static_cast<std::size_t>(k)], v = t[static_cast<std::size_t>((k + 1) % 3)];
        acc[static_cast<std::size_t>(u)] += pts[static_cast<std::size_t>(v)];
        acc[static_cast<std::size_t>(v)] += pts[static_cast<std::size_t>(u)];
        cnt[static_cast<std::size_t>(u)]++;
        cnt[static_cast<std::size_t>(v)]++;
      }
    std::vector<std::vector<std::size_t>> n2t(pts.size());
    for (std::size_t e = 0; e < tris.size(); ++e)
      for (int k = 0; k < 3; ++k) n2t[static_cast<std::size_t>(tris[e][static_cast<std::size_t>(k)])].push_back(e);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (fixed[i] || cnt[i] == 0) continue;
      const Vec2 target = acc[i] * (1.0 / cnt[i]);
      const Vec2 trial = pts[i] + 0.7 * (target - pts[i]);
      const Vec2 old = pts[i];
      pts[i] = trial;
      bool ok = true;
      for (std::size_t e : n2t[i]) {
        const auto& t = tris[e];
        if (orient2(pts[static_cast<std::size_t>(t[0])], pts[static_cast<std::size_t>(t[1])],
                    pts[static_cast<std::size_t>(t[2])]) < 1e-3 * h * h)
          ok = false;
      }
      if (!ok) pts[i] = old;
    }
  }

  // local Delaunay flips to restore quality (constrained edges locked)
  long flip_budget = 10 * static_cast<long>(tris.size());
  for (int sweep = 0; sweep < 200 && flip_budget > 0; ++sweep) {
    std::map<EdgeKey, std::vector<std::size_t>> e2t;
    for (std::size_t e = 0; e < tris.size(); ++e)
      for (int k = 0; k < 3; ++k)
        e2t[ekey(tris[e][static_cast<std::size_t>(k)], tris[e][static_cast<std::size_t>((k + 1) % 3)])].push_back(e);
    bool flipped = false;
    for (const auto& [key, owners] : e2t) {
      if (owners.size() != 2 || constrained.count(key)) continue;
      const std::size_t e1 = owners[0], e2i = owners[1];
      auto opp = [&](std::size_t e) {
        for (int k = 0; k < 3; ++k) {
          const int v = tris[e][static_cast<std::size_t>(k)];
          if (v != key.u && v != key.v) return v;
        }
        return -1;
      };
      const int c1 = opp(e1), c2 = opp(e2i);
      if (c1 < 0 || c2 < 0 || c1 == c2) continue;
      const Vec2 &pu = pts[static_cast<std::size_t>(key.u)], &pv = pts[static_cast<std::size_t>(key.v)];
      const Vec2 &p1 = pts[static_cast<std::size_t>(c1)], &p2 = pts[static_cast<std::size_t>(c2)];
      // flip when the opposite vertex violates the circumcircle
      const double det = orient2(pu, pv, p1) > 0
                             ? incircle_det(pu, pv, p1, p2)
                             : incircle_det(pv, pu, p1, p2);
      if (det <= 1e-14) continue;
      if (orient2(p1, p2, pu) <= 1e-12 * h * h || orient2(p2, p1, pv) <= 1e-12 * h * h) continue;
      tris[e1] = {c1, c2, key.v};
      tris[e2i] = {c2, c1, key.u};
      for (auto* t : {&tris[e1], &tris[e2i]})
        if (orient2(pts[static_cast<std::size_t>((*t)[0])], pts[static_cast<std::size_t>((*t)[1])],
                    pts[static_cast<std::size_t>((*t)[2])]) < 0)
          std::swap((*t)[1], (*t)[2]);
      flipped = true;
      --flip_budget;
      break;  // edge map invalidated; restart sweep
    }
    if (!flipped) break;
  }

  CrackedMesh m;
  m.X = std::move(pts);
  m.tri = std::move(tris);
  m.region.assign(m.tri.size(), 0);
  m.h = h;
  m.s_crack = s_crack;
  m.s_ahead = s_ahead;
  for (std::size_t k = 0; k < chain_ids.size(); ++k)
    m.chain.push_back({chain_ids[k], chain_ids[k], chain_arcs[k]});
  m.tip_index = static_cast<int>(tip_pos);

  // duplicate nodes strictly behind the tip
  for (std::size_t k = 0; k < m.chain.size(); ++k) {
    if (!(m.chain[k].s < s_crack - kDupTol)) continue;
    const Vec2 here = m.X[static_cast<std::size_t>(m.chain[k].plus)];
    const Vec2 next = path.eval(std::min(m.chain[k].s + 0.25 * hc, path.b()));
    const Vec2 prev = k == 0 ? here - path.tangent(path.a0()) * (0.25 * hc)
                             : m.X[static_cast<std::size_t>(m.chain[k - 1].plus)];
    split_chain_node(m, k, prev, next);
  }
  retag_sides(m);

  // Dirichlet nodes: on Dirichlet-labeled boundary edges, never crack copies
  std::set<int> copies;
  for (const auto& cn : m.chain)
    if (cn.split()) { copies.insert(cn.plus); copies.insert(cn.minus); }
  std::set<int> dset;
  for (std::size_t ei = 0; ei < domain.edge_count(); ++ei) {
    if (!domain.dirichlet_edge[ei]) continue;
    for (std::size_t i = 0; i < m.X.size(); ++i)
      if (point_segment_distance(m.X[i], domain.edge_a(ei), domain.edge_b(ei)) < 1e-9 &&
          !copies.count(static_cast<int>(i)))
        dset.insert(static_cast<int>(i));
  }
  m.dirichlet_nodes.assign(dset.begin(), dset.end());

  m.audit_or_throw();
  return m;
}

CrackedMesh grow_mesh(const CrackedMesh& mesh, const MeshMotion& motion, double t) {
  CrackedMesh out = mesh;
  const double s_new = motion.s_at(t);
  if (s_new == mesh.s_crack) return out;

  std::vector<bool> on_chain(mesh.X.size(), false);
  for (const auto& cn : mesh.chain) {
    on_chain[static_cast<std::size_t>(cn.plus)] = true;
    on_chain[static_cast<std::size_t>(cn.minus)] = true;
  }
  for (std::size_t i = 0; i < mesh.X.size(); ++i)
    if (!on_chain[i]) out.X[i] = motion.map(t, mesh.X[i]);
  for (std::size_t k = 0; k < out.chain.size(); ++k) {
    auto& cn = out.chain[k];
    const double snew = motion.slide_arc(t, cn.s);
    const Vec2 p = motion.path().eval(snew);
    cn.s = snew;
    out.X[static_cast<std::size_t>(cn.plus)] = p;
    out.X[static_cast<std::size_t>(cn.minus)] = p;
  }
  out.s_crack = s_new;
  out.s_ahead = out.chain.back().s;

  // split any constrained-path node that ended up behind the new tip
  for (std::size_t k = 0; k < out.chain.size(); ++k) {
    auto& cn = out.chain[k];
    if (cn.split() || !(cn.s < out.s_crack - kDupTol)) continue;
    if (static_cast<int>(k) == out.tip_index) continue;
    const Vec2 here = out.X[static_cast<std::size_t>(cn.plus)];
    const Vec2 next = k + 1 < out.chain.size()
                          ? out.X[static_cast<std::size_t>(out.chain[k + 1].plus)]
                          : motion.path().eval(cn.s + 1e-3);
    const Vec2 prev = k == 0 ? here - motion.path().tangent(cn.s) * 1e-3
                             : out.X[static_cast<std::size_t>(out.chain[k - 1].plus)];
    split_chain_node(out, k, prev, next);
  }
  retag_sides(out);

  // discrete volume-change gate
  for (std::size_t e = 0; e < out.tri.size(); ++e) {
    const double a0 = mesh.area(e);
    const double a1 = out.area(e);
    if (!(a1 > 0.0) || a1 < (1.0 - motion.eps()) * a0 || a1 > (1.0 + motion.eps()) * a0)
      throw GrowMeshError("grow_mesh: element volume change outside tolerance");
  }
  return out;
}

namespace {

struct Locator {
  const CrackedMesh& m;
  Vec2 lo{0, 0};
  double cell = 0;
  int nx = 1, ny = 1;
  std::vector<std::vector<int>> bins;

  explicit Locator(const CrackedMesh& mesh) : m(mesh) {
    Vec2 hi = m.X[0];
    lo = m.X[0];
    for (const auto& p : m.X) {
      lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
    cell = std::max(m.h, 1e-6);
    nx = std::max(1, static_cast<int>((hi.x - lo.x) / cell) + 1);
    ny = std::max(1, static_cast<int>((hi.y - lo.y) / cell) + 1);
    bins.resize(static_cast<std::size_t>(nx * ny));
    for (std::size_t e = 0; e < m.tri.size(); ++e) {
      Vec2 tlo = m.X[static_cast<std::size_t>(m.tri[e][0])], thi = tlo;
      for (int k = 1; k < 3; ++k) {
        const Vec2& p = m.X[static_cast<std::size_t>(m.tri[e][static_cast<std::size_t>(k)])];
        tlo.x = std::min(tlo.x, p.x); tlo.y = std::min(tlo.y, p.y);
        thi.x = std::max(thi.x, p.x); thi.y = std::max(thi.y, p.y);
      }
      for (int gy = gy_of(tlo.y); gy <= gy_of(thi.y); ++gy)
        for (int gx = gx_of(tlo.x); gx <= gx_of(thi.x); ++gx)
          bins[static_cast<std::size_t>(gy * nx + gx)].push_back(static_cast<int>(e));
    }
  }
  int gx_of(double x) const { return std::clamp(static_cast<int>((x - lo.x) / cell), 0, nx - 1); }
  int gy_of(double y) const { return std::clamp(static_cast<int>((y - lo.y) / cell), 0, ny - 1); }

  bool side_ok(int e, int side) const {
    if (side == 0) return true;
    return m.tri_side[static_cast<std::size_t>(e)] != -side;
  }

  // barycentric coordinates of p in element e (not clamped)
  std::array<double, 3> bary(int e, const Vec2& p) const {
    const auto& t = m.tri[static_cast<std::size_t>(e)];
    const Vec2& a = m.X[static_cast<std::size_t>(t[0])];
    const Vec2& b = m.X[static_cast<std::size_t>(t[1])];
    const Vec2& c = m.X[static_cast<std::size_t>(t[2])];
    const double A = orient2(a, b, c);
    return {orient2(p, b, c) / A, orient2(a, p, c) / A, orient2(a, b, p) / A};
  }

  int locate(const Vec2& p, int side, bool* exact) const {
    const auto& cands = bins[static_cast<std::size_t>(gy_of(p.y) * nx + gx_of(p.x))];
    for (int e : cands) {
      if (!side_ok(e, side)) continue;
      const auto bc = bary(e, p);
      if (bc[0] >= -1e-10 && bc[1] >= -1e-10 && bc[2] >= -1e-10) {
        if (exact) *exact = true;
        return e;
      }
    }
    // nearest same-side element, brute force
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t e = 0; e < m.tri.size(); ++e) {
      if (!side_ok(static_cast<int>(e), side)) continue;
      const double d = (m.centroid(e) - p).norm2();
      if (d < best) { best = d; arg = static_cast<int>(e); }
    }
    if (exact) *exact = false;
    return arg;
  }
};

std::map<int, int> node_sides(const CrackedMesh& m) {
  std::map<int, int> s;
  for (const auto& cn : m.chain)
    if (cn.split()) { s[cn.plus] = +1; s[cn.minus] = -1; }
  return s;
}

}  // namespace

NodalField transfer_nodal(const CrackedMesh& from, const CrackedMesh& to,
                          const NodalField& field, TransferStats* stats) {
  Locator loc(from);
  const auto sides = node_sides(to);
  NodalField out(to.n_nodes());
  for (std::size_t i = 0; i < to.n_nodes(); ++i) {
    int side = 0;
    const auto it = sides.find(static_cast<int>(i));
    if (it != sides.end()) side = it->second;
    bool exact = false;
    const int e = loc.locate(to.X[i], side, &exact);
    if (!exact && stats) stats->fallback_nearest++;
    auto bc = loc.bary(e, to.X[i]);
    for (auto& b : bc) b = std::max(b, 0.0);
    const double sum = bc[0] + bc[1] + bc[2];
    for (auto& b : bc) b /= sum;
    const auto& t = from.tri[static_cast<std::size_t>(e)];
    Vec2 val;
    for (int k = 0; k < 3; ++k)
      val += bc[static_cast<std::size_t>(k)] * field.at(static_cast<std::size_t>(t[static_cast<std::size_t>(k)]));
    out.set(i, val);
  }
  return out;
}

SymField transfer_element_field(const CrackedMesh& from, const CrackedMesh& to,
                                const SymField& field, TransferStats* stats) {
  Locator loc(from);
  SymField out(to.n_elems());
  for (std::size_t e = 0; e < to.n_elems(); ++e) {
    bool exact = false;
    const int src = loc.locate(to.centroid(e), to.tri_side[e], &exact);
    if (!exact && stats) stats->fallback_nearest++;
    out.set(e, field.get(static_cast<std::size_t>(src)));
  }
  return out;
}

}  // namespace viscofrac
