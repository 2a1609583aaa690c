#pragma once

#include <memory>
#include <string>

#include "viscofrac/crack_path.hpp"
#include "viscofrac/length_profile.hpp"

namespace viscofrac {

/// Local volume-near-preserving deformation of the domain that slides the
/// crack tip along the (extended) path from s(t0) to s(t), supported in the
/// ball B(tip0, 2*rho). Points on the path stay on the path; the forward
/// map is exact at the tip, so the tip node lands at gamma(s(t)).
class MeshMotion {
 public:
  MeshMotion(std::shared_ptr<const CrackPath> path, std::shared_ptr<const LengthProfile> profile,
             double t0, double t1, double rho, double eps);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  double rho() const { return rho_; }
  double eps() const { return eps_; }
  Vec2 tip0() const { return x0_; }
  double s0() const { return s0_; }
  double s_at(double t) const { return profile_->eval(t); }

  /// Forward map Phi(t, y).
  Vec2 map(double t, const Vec2& y) const;
  /// Inverse map Psi(t, x) by fixed-point iteration; throws on divergence.
  Vec2 inverse(double t, const Vec2& x) const;
  /// New arc parameter of the on-path material point that sat at arc sigma at t0.
  double slide_arc(double t, double sigma) const;
  /// Spatial Jacobian determinant by central finite differences.
  double det_grad(double t, const Vec2& y, double fd_h = 1e-6) const;
  /// Time derivative magnitude by central finite differences.
  Vec2 velocity(double t, const Vec2& y, double fd_h = 1e-7) const;

 private:
  double bump(double u) const;  // 1 at 0, 0 beyond 1, quintic rolloff
  std::shared_ptr<const CrackPath> path_;
  std::shared_ptr<const LengthProfile> profile_;
  double t0_, t1_, rho_, eps_;
  double s0_;
  Vec2 x0_;
};

struct MotionCheck {
  bool pass = false;
  double worst_identity_t0 = 0;   // |Phi(t0,y) - y|
  double worst_outside = 0;       // |Phi(t,y) - y| outside the support ball
  double worst_inverse = 0;       // |Psi(Phi(y)) - y|
  double det_lo = 1, det_hi = 1;  // observed range of det DPhi
  double max_speed = 0;           // observed |d/dt Phi|
  std::string detail;
};

/// Construct and verify the motion at sampled points. Preconditions: the
/// window satisfies t1 - t0 <= rho/(2 mu), the tip stays within the path,
/// and the support ball is interior to the domain.
MeshMotion build_tip_motion(std::shared_ptr<const CrackPath> path,
                            std::shared_ptr<const LengthProfile> profile, double t0,
                            double t1, double rho, double eps,
                            const DomainSpec* domain = nullptr,
                            MotionCheck* check = nullptr, int check_samples = 200);

}  // namespace viscofrac
