#include "viscofrac/crack_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace viscofrac {
namespace {

// Fornberg finite-difference weights: c[j][k] is the weight of f(x[j]) in the
// k-th derivative at xi.
std::vector<std::vector<double>> fd_weights(double xi, const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - xi;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - xi;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

constexpr int kStencil = 7;

}  // namespace

void CrackPath::finalize() {
  const int n = static_cast<int>(pts_.size());
  d1_.assign(pts_.size(), Vec2{});
  d2_.assign(pts_.size(), Vec2{});
  d3_.assign(pts_.size(), Vec2{});
  if (n < 2) return;
  const int w = std::min(kStencil, n);
  const int half = w / 2;

  // Weight tables are cached per relative window offset.
  std::vector<std::vector<std::vector<double>>> cache(static_cast<std::size_t>(w));
  for (int i = 0; i < n; ++i) {
    int i0 = std::clamp(i - half, 0, n - w);
    const int off = i - i0;
    auto& tab = cache[static_cast<std::size_t>(off)];
    if (tab.empty()) {
      std::vector<double> xs(static_cast<std::size_t>(w));
      for (int k = 0; k < w; ++k) xs[static_cast<std::size_t>(k)] = static_cast<double>(k - off) * ds_;
      tab = fd_weights(0.0, xs, 3);
    }
    Vec2 g1, g2, g3;
    for (int k = 0; k < w; ++k) {
      const Vec2& p = pts_[static_cast<std::size_t>(i0 + k)];
      g1 += tab[static_cast<std::size_t>(k)][1] * p;
      g2 += tab[static_cast<std::size_t>(k)][2] * p;
      g3 += tab[static_cast<std::size_t>(k)][3] * p;
    }
    d1_[static_cast<std::size_t>(i)] = g1;
    d2_[static_cast<std::size_t>(i)] = g2;
    d3_[static_cast<std::size_t>(i)] = g3;
  }
  if (!tip_analytic_) {
    const Vec2 t1 = d1_.back();
    tip_.phi = std::atan2(t1.y, t1.x);
    tip_.kappa = cross(t1, d2_.back());
    tip_.dkappa = cross(t1, d3_.back());
  }
}

namespace {
Vec2 interp6(const std::vector<Vec2>& tab, double a0, double ds, double s) {
  const int n = static_cast<int>(tab.size());
  if (n == 1) return tab[0];
  const int w = std::min(6, n);
  double u = (s - a0) / ds;
  int i0 = std::clamp(static_cast<int>(std::floor(u)) - (w / 2 - 1), 0, n - w);
  u -= static_cast<double>(i0);
  Vec2 out;
  for (int j = 0; j < w; ++j) {
    double lj = 1.0;
    for (int k = 0; k < w; ++k) {
      if (k == j) continue;
      lj *= (u - static_cast<double>(k)) / static_cast<double>(j - k);
    }
    out += lj * tab[static_cast<std::size_t>(i0 + j)];
  }
  return out;
}
}  // namespace

Vec2 CrackPath::eval(double s) const { return interp6(pts_, a0_, ds_, std::clamp(s, a0_, b_)); }
Vec2 CrackPath::deriv1(double s) const { return interp6(d1_, a0_, ds_, std::clamp(s, a0_, b_)); }
Vec2 CrackPath::deriv2(double s) const { return interp6(d2_, a0_, ds_, std::clamp(s, a0_, b_)); }
Vec2 CrackPath::deriv3(double s) const { return interp6(d3_, a0_, ds_, std::clamp(s, a0_, b_)); }

Vec2 CrackPath::tangent(double s) const {
  Vec2 t = deriv1(s);
  const double n = t.norm();
  return n > 0 ? t * (1.0 / n) : t;
}

double CrackPath::project(const Vec2& y, double lo, double hi) const {
  lo = std::clamp(lo, a0_, b_);
  hi = std::clamp(hi, a0_, b_);
  if (hi < lo) std::swap(lo, hi);
  const std::size_t ilo = static_cast<std::size_t>(std::max(0.0, std::floor((lo - a0_) / ds_)));
  const std::size_t ihi = std::min(pts_.size() - 1,
                                   static_cast<std::size_t>(std::ceil((hi - a0_) / ds_)));
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = ilo;
  for (std::size_t i = ilo; i <= ihi; ++i) {
    const double d2y = (pts_[i] - y).norm2();
    if (d2y < best) { best = d2y; arg = i; }
  }
  double s = std::clamp(arc_of(arg), lo, hi);
  for (int it = 0; it < 40; ++it) {
    const Vec2 g = eval(s), t = deriv1(s), c = deriv2(s);
    const double f = dot(y - g, t);
    const double fp = -t.norm2() + dot(y - g, c);
    if (std::abs(fp) < 1e-14) break;
    double snew = std::clamp(s - f / fp, lo, hi);
    if (std::abs(snew - s) < 1e-14) { s = snew; break; }
    s = snew;
  }
  return s;
}

CrackPath CrackPath::straight(Vec2 mouth, Vec2 dir, double a0, double b,
                              double r, double L, double ds_target) {
  const double n = dir.norm();
  const Vec2 t = dir * (1.0 / n);
  const auto zero = [](double) { return 0.0; };
  const double phi0 = std::atan2(t.y, t.x);
  return from_curvature(mouth, phi0, a0, b, zero, zero, r, L, ds_target);
}

CrackPath CrackPath::from_curvature(Vec2 start, double phi0, double a0, double b,
                                    const std::function<double(double)>& kappa,
                                    const std::function<double(double)>& dkappa,
                                    double r, double L, double ds_target) {
  if (!(b > a0)) throw std::invalid_argument("crack path: b must exceed a0");
  CrackPath p;
  p.a0_ = a0;
  p.b_ = b;
  p.r_ = r;
  p.L_ = L;
  const std::size_t nseg =
      std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil((b - a0) / ds_target)));
  p.ds_ = (b - a0) / static_cast<double>(nseg);
  p.pts_.reserve(nseg + 1);
  p.pts_.push_back(start);

  // RK4 on (x, y, phi) with unit tangent; several substeps per sample.
  const int sub = 8;
  const double h = p.ds_ / sub;
  double x = start.x, y = start.y, phi = phi0;
  double ell = 0.0;
  for (std::size_t i = 0; i < nseg; ++i) {
    for (int k = 0; k < sub; ++k) {
      const double k1p = kappa(ell);
      const double k1x = std::cos(phi), k1y = std::sin(phi);
      const double k2p = kappa(ell + 0.5 * h);
      const double p2 = phi + 0.5 * h * k1p;
      const double k2x = std::cos(p2), k2y = std::sin(p2);
      const double p3 = phi + 0.5 * h * k2p;
      const double k3x = std::cos(p3), k3y = std::sin(p3);
      const double k4p = kappa(ell + h);
      const double p4 = phi + h * k2p;  // k3p == k2p (midpoint sample)
      const double k4x = std::cos(p4), k4y = std::sin(p4);
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      phi += h / 6.0 * (k1p + 4.0 * k2p + k4p);
      ell += h;
    }
    p.pts_.push_back({x, y});
  }
  p.tip_.phi = phi;
  p.tip_.kappa = kappa(b - a0);
  p.tip_.dkappa = dkappa(b - a0);
  p.tip_analytic_ = true;
  p.finalize();
  return p;
}

CrackPath CrackPath::from_samples(std::vector<Vec2> pts, double a0, double ds,
                                  double r, double L) {
  if (pts.size() < 2) throw std::invalid_argument("crack path: need at least 2 samples");
  CrackPath p;
  p.pts_ = std::move(pts);
  p.a0_ = a0;
  p.ds_ = ds;
  p.b_ = a0 + ds * static_cast<double>(p.pts_.size() - 1);
  p.r_ = r;
  p.L_ = L;
  p.finalize();
  return p;
}

CrackPath CrackPath::truncated(double s_cut) const {
  s_cut = std::clamp(s_cut, a0_ + 8 * ds_, b_);
  CrackPath p;
  p.a0_ = a0_;
  p.b_ = s_cut;
  p.r_ = r_;
  p.L_ = L_;
  const std::size_t nseg =
      std::max<std::size_t>(8, static_cast<std::size_t>(std::llround((s_cut - a0_) / ds_)));
  p.ds_ = (s_cut - a0_) / static_cast<double>(nseg);
  p.pts_.resize(nseg + 1);
  for (std::size_t i = 0; i <= nseg; ++i) p.pts_[i] = eval(a0_ + static_cast<double>(i) * p.ds_);
  const Vec2 t1 = deriv1(s_cut);
  p.tip_.phi = std::atan2(t1.y, t1.x);
  p.tip_.kappa = cross(t1, deriv2(s_cut));
  p.tip_.dkappa = cross(t1, deriv3(s_cut));
  p.tip_analytic_ = true;
  p.finalize();
  return p;
}

CrackPath CrackPath::extended_by_curvature(double length,
                                           const std::function<double(double)>& kappa,
                                           const std::function<double(double)>& dkappa,
                                           double new_r, double new_L) const {
  const std::size_t extra = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(length / ds_ - 1e-9)));
  CrackPath p;
  p.a0_ = a0_;
  p.ds_ = ds_;
  p.b_ = b_ + static_cast<double>(extra) * ds_;
  p.r_ = new_r > 0 ? new_r : r_;
  p.L_ = new_L > 0 ? new_L : L_;
  p.pts_ = pts_;
  p.pts_.reserve(pts_.size() + extra);

  const int sub = 8;
  const double h = ds_ / sub;
  double x = pts_.back().x, y = pts_.back().y, phi = tip_.phi;
  double ell = 0.0;
  for (std::size_t i = 0; i < extra; ++i) {
    for (int k = 0; k < sub; ++k) {
      const double k1p = kappa(ell);
      const double k1x = std::cos(phi), k1y = std::sin(phi);
      const double k2p = kappa(ell + 0.5 * h);
      const double p2 = phi + 0.5 * h * k1p;
      const double k2x = std::cos(p2), k2y = std::sin(p2);
      const double p3 = phi + 0.5 * h * k2p;
      const double k3x = std::cos(p3), k3y = std::sin(p3);
      const double k4p = kappa(ell + h);
      const double p4 = phi + h * k2p;
      const double k4x = std::cos(p4), k4y = std::sin(p4);
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      phi += h / 6.0 * (k1p + 4.0 * k2p + k4p);
      ell += h;
    }
    p.pts_.push_back({x, y});
  }
  const double end = static_cast<double>(extra) * ds_;
  p.tip_.phi = phi;
  p.tip_.kappa = kappa(end);
  p.tip_.dkappa = dkappa(end);
  p.tip_analytic_ = true;
  p.finalize();
  return p;
}

std::optional<CrackPath> CrackPath::extended_with_kink(double theta, double length,
                                                       double curvature_cap) const {
  // Quintic Hermite blend from the incoming (kappa, dkappa) to a constant
  // target curvature over the first half, a flat tail after: the tip of the
  // result always carries dkappa = 0 so the next blend stays C^{2}-matched.
  const double lb = 0.5 * length;
  const double k0 = tip_.kappa;
  const double dk0 = tip_.dkappa;
  // total turn = lb*(k0/2 + dk0*lb/10 + kt/2) + kt*(length - lb)
  const double denom = length - 0.5 * lb;
  const double kt = (theta - lb * (0.5 * k0 + 0.1 * dk0 * lb)) / denom;
  if (std::abs(kt) > curvature_cap) return std::nullopt;

  auto hermite = [=](double ell) {
    if (ell >= lb) return kt;
    const double u = ell / lb;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    const double h00 = 1.0 - 10.0 * u3 + 15.0 * u4 - 6.0 * u5;
    const double h10 = u - 6.0 * u3 + 8.0 * u4 - 3.0 * u5;
    const double h01 = 10.0 * u3 - 15.0 * u4 + 6.0 * u5;
    return k0 * h00 + dk0 * lb * h10 + kt * h01;
  };
  auto dhermite = [=](double ell) {
    if (ell >= lb) return 0.0;
    const double u = ell / lb;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    const double d00 = (-30.0 * u2 + 60.0 * u3 - 30.0 * u4) / lb;
    const double d10 = (1.0 - 18.0 * u2 + 32.0 * u3 - 15.0 * u4);
    const double d01 = (30.0 * u2 - 60.0 * u3 + 30.0 * u4) / lb;
    return k0 * d00 + dk0 * d10 + kt * d01;
  };
  return extended_by_curvature(length, hermite, dhermite);
}

CrackPath extend_path(const CrackPath& path) {
  const double r_hat = 0.5 * path.r();
  const double L_hat = 2.0 * path.L();
  const double cap = 0.999 / r_hat;
  const double u0 = 0.9 * cap;
  const double k0 = path.tip().kappa;
  const double dk0 = path.tip().dkappa;
  // Linear continuation of the curvature with a smooth saturation at the cap.
  auto soft = [=](double u) {
    const double a = std::abs(u);
    if (a <= u0) return u;
    const double span = cap - u0;
    const double v = u0 + span * std::tanh((a - u0) / span);
    return u < 0 ? -v : v;
  };
  auto dsoft = [=](double u) {
    const double a = std::abs(u);
    if (a <= u0) return 1.0;
    const double span = cap - u0;
    const double th = std::tanh((a - u0) / span);
    return 1.0 - th * th;
  };
  auto kap = [=](double ell) { return soft(k0 + dk0 * ell); };
  auto dkap = [=](double ell) { return dsoft(k0 + dk0 * ell) * dk0; };
  return path.extended_by_curvature(r_hat, kap, dkap, r_hat, L_hat);
}

PathReport validate_path(const CrackPath& path, const DomainSpec* domain,
                         const CrackPath* gamma0, const PathValidateOptions& opt) {
  if (path.size() < 4)
    throw std::invalid_argument("validate_path: need at least 4 samples");
  PathReport rep;
  const auto& pts = path.samples();
  const auto& d1 = path.d1_table();
  const auto& d3 = path.d3_table();
  const std::size_t n = pts.size();
  const double ds = path.ds();
  const double r = path.r();
  const double L = path.L();

  // (a) agreement with the fixed initial curve on [a0, 0]
  if (gamma0) {
    double worst = 0.0;
    for (std::size_t j = 0; j < gamma0->size(); ++j) {
      const double s = gamma0->arc_of(j);
      if (s > 0.0 + 1e-12) break;
      worst = std::max(worst, dist(path.eval(s), gamma0->samples()[j]));
    }
    if (worst > opt.tol_initial) {
      rep.ok_initial = false;
      rep.detail = "initial-curve mismatch " + std::to_string(worst);
    }
  }

  // (b) unit speed
  for (std::size_t i = 0; i < n; ++i)
    rep.worst_unit_speed = std::max(rep.worst_unit_speed, std::abs(d1[i].norm() - 1.0));
  if (rep.worst_unit_speed > opt.tol_unit) rep.ok_unit_speed = false;

  // (c) tangent disks of radius r do not meet the sampled curve; the disk is
  // shrunk by ds^2/r against discretization chatter.
  const double r_eff = r - ds * ds / r - 1e-12;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 t = d1[i];
    const double tn = t.norm();
    if (tn < 1e-12) continue;
    const Vec2 nrm = t.perp() * (1.0 / tn);
    const Vec2 cplus = pts[i] + r * nrm;
    const Vec2 cminus = pts[i] - r * nrm;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dp = r_eff - dist(pts[j], cplus);
      const double dm = r_eff - dist(pts[j], cminus);
      const double depth = std::max(dp, dm);
      if (depth > rep.worst_disk_depth) rep.worst_disk_depth = depth;
    }
  }
  if (rep.worst_disk_depth > 0.0) rep.ok_disks = false;

  // (d) boundary clearance of gamma([0, b])
  rep.min_boundary_dist = std::numeric_limits<double>::infinity();
  if (domain) {
    for (std::size_t i = 0; i < n; ++i) {
      if (path.arc_of(i) < -1e-12) continue;
      rep.min_boundary_dist = std::min(rep.min_boundary_dist, domain->boundary_distance(pts[i]));
    }
    if (rep.min_boundary_dist < 2.0 * r - opt.clearance_slack) rep.ok_clearance = false;
  }

  // (e) third derivative bound and Lipschitz bound
  const double cap3 = L * (1.0 + opt.tol_third_rel) + opt.tol_third_abs;
  for (std::size_t i = 0; i < n; ++i)
    rep.worst_third = std::max(rep.worst_third, d3[i].norm());
  for (std::size_t i = 0; i + 1 < n; ++i)
    rep.worst_third_lip = std::max(rep.worst_third_lip, dist(d3[i + 1], d3[i]) / ds);
  if (rep.worst_third > cap3 || rep.worst_third_lip > cap3) rep.ok_third = false;

  // simplicity of the sampled polyline
  for (std::size_t i = 0; i + 1 < n && rep.ok_simple; ++i)
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1])) {
        rep.ok_simple = false;
        rep.bad_segment_a = static_cast<int>(i);
        rep.bad_segment_b = static_cast<int>(j);
        break;
      }
    }

  rep.pass = rep.ok_initial && rep.ok_unit_speed && rep.ok_disks && rep.ok_clearance &&
             rep.ok_third && rep.ok_simple;
  return rep;
}

void save_path(const CrackPath& path, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file);
  char buf[160];
  std::snprintf(buf, sizeof buf, "# crack-path a0 %.17g b %.17g r %.17g L %.17g\n",
                path.a0(), path.b(), path.r(), path.L());
  out << buf;
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", path.arc_of(i),
                  path.samples()[i].x, path.samples()[i].y);
    out << buf;
  }
}

CrackPath load_path(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::string line;
  double a0 = 0, b = 0, r = 0, L = 0;
  bool have_header = false;
  std::vector<Vec2> pts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) {
        if (tok == "a0") ss >> a0;
        else if (tok == "b") ss >> b;
        else if (tok == "r") ss >> r;
        else if (tok == "L") ss >> L;
      }
      have_header = true;
      continue;
    }
    std::istringstream ss(line);
    double s, x, y;
    if (ss >> s >> x >> y) pts.push_back({x, y});
  }
  if (!have_header || pts.size() < 2)
    throw std::runtime_error("malformed crack path file " + file);
  const double ds = (b - a0) / static_cast<double>(pts.size() - 1);
  return CrackPath::from_samples(std::move(pts), a0, ds, r, L);
}

}  // namespace viscofrac
