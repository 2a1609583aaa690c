#include "viscofrac/tip_motion.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace viscofrac {

MeshMotion::MeshMotion(std::shared_ptr<const CrackPath> path,
                       std::shared_ptr<const LengthProfile> profile, double t0, double t1,
                       double rho, double eps)
    : path_(std::move(path)), profile_(std::move(profile)), t0_(t0), t1_(t1), rho_(rho),
      eps_(eps) {
  s0_ = profile_->eval(t0_);
  x0_ = path_->eval(s0_);
}

double MeshMotion::bump(double u) const { return 1.0 - smoothstep5(std::abs(u)); }

double MeshMotion::slide_arc(double t, double sigma) const {
  const double a = profile_->eval(t) - s0_;
  if (a == 0.0) return sigma;
  const double g_arc = bump((sigma - s0_) / (2.0 * rho_));
  const double g_ball = bump(dist(path_->eval(sigma), x0_) / (2.0 * rho_));
  return sigma + a * g_arc * g_ball;
}

Vec2 MeshMotion::map(double t, const Vec2& y) const {
  const double a = profile_->eval(t) - s0_;
  if (a == 0.0) return y;
  const double d0 = dist(y, x0_);
  if (d0 >= 2.0 * rho_) return y;
  const double sigma = path_->project(y, s0_ - 3.0 * rho_, path_->b());
  const double g_arc = bump((sigma - s0_) / (2.0 * rho_));
  const double g_ball = bump(d0 / (2.0 * rho_));
  const double adv = a * g_arc * g_ball;
  if (adv == 0.0) return y;
  return y + (path_->eval(sigma + adv) - path_->eval(sigma));
}

Vec2 MeshMotion::inverse(double t, const Vec2& x) const {
  Vec2 y = x;
  for (int it = 0; it < 80; ++it) {
    const Vec2 res = map(t, y) - x;
    if (res.norm() < 1e-13) return y;
    y -= res;
  }
  const double final_err = (map(t, y) - x).norm();
  if (final_err < 1e-10) return y;
  throw std::runtime_error("tip motion: inverse fixed point failed to converge, residual " +
                           std::to_string(final_err));
}

double MeshMotion::det_grad(double t, const Vec2& y, double fd_h) const {
  const Vec2 dx = (map(t, {y.x + fd_h, y.y}) - map(t, {y.x - fd_h, y.y})) * (0.5 / fd_h);
  const Vec2 dy = (map(t, {y.x, y.y + fd_h}) - map(t, {y.x, y.y - fd_h})) * (0.5 / fd_h);
  return dx.x * dy.y - dx.y * dy.x;
}

Vec2 MeshMotion::velocity(double t, const Vec2& y, double fd_h) const {
  const double ta = std::max(t - fd_h, t0_);
  const double tb = std::min(t + fd_h, t1_);
  return (map(tb, y) - map(ta, y)) * (1.0 / (tb - ta));
}

MeshMotion build_tip_motion(std::shared_ptr<const CrackPath> path,
                            std::shared_ptr<const LengthProfile> profile, double t0, double t1,
                            double rho, double eps, const DomainSpec* domain,
                            MotionCheck* check, int check_samples) {
  if (!(t1 > t0)) throw std::invalid_argument("tip motion: empty window");
  const double mu = profile->mu();
  if (mu > 0 && (t1 - t0) > rho / (2.0 * mu) + 1e-12)
    throw std::invalid_argument("tip motion: window longer than rho/(2 mu)");
  const double s_end = profile->eval(t1);
  if (s_end > path->b() + 1e-12)
    throw std::invalid_argument("tip motion: profile exceeds the path length");
  MeshMotion m(path, profile, t0, t1, rho, eps);
  if (domain) {
    // support ball must be interior
    if (domain->boundary_distance(m.tip0()) < 2.0 * rho - 1e-12)
      throw std::invalid_argument("tip motion: support ball reaches the boundary");
  }
  if (check) {
    MotionCheck c;
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> ur(-2.2 * rho, 2.2 * rho);
    std::uniform_real_distribution<double> ut(t0, t1);
    const Vec2 x0 = m.tip0();
    for (int k = 0; k < check_samples; ++k) {
      const Vec2 y = x0 + Vec2{ur(rng), ur(rng)};
      const double t = ut(rng);
      c.worst_identity_t0 = std::max(c.worst_identity_t0, dist(m.map(t0, y), y));
      if (dist(y, x0) > 2.0 * rho)
        c.worst_outside = std::max(c.worst_outside, dist(m.map(t, y), y));
      const Vec2 x = m.map(t, y);
      c.worst_inverse = std::max(c.worst_inverse, dist(m.inverse(t, x), y));
      const double dj = m.det_grad(t, y);
      c.det_lo = std::min(c.det_lo, dj);
      c.det_hi = std::max(c.det_hi, dj);
      c.max_speed = std::max(c.max_speed, m.velocity(t, y).norm());
    }
    c.pass = c.worst_identity_t0 < 1e-12 && c.worst_outside < 1e-12 &&
             c.worst_inverse < 1e-9 && c.det_lo >= 1.0 - eps && c.det_hi <= 1.0 + eps &&
             c.max_speed <= mu * (1.0 + eps) + 1e-9;
    *check = c;
  }
  return m;
}

}  // namespace viscofrac
