#pragma once

#include <string>
#include <vector>

#include "viscofrac/geometry.hpp"

namespace viscofrac {

enum class ProfileShape { Constant, Linear, Smoothstep };

std::string to_string(ProfileShape s);
ProfileShape profile_shape_from_string(const std::string& s);

/// One smooth piece of a crack-length profile on [t0, t1]. Closed-form
/// family: constant, linear ramp (rate v), or quintic smoothstep rising by
/// delta with peak speed (15/8)*delta/(t1-t0).
struct ProfilePiece {
  ProfileShape shape = ProfileShape::Constant;
  double t0 = 0, t1 = 0;
  double s0 = 0;     // value at t0
  double rate = 0;   // linear slope
  double delta = 0;  // smoothstep rise

  double eval(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double d3(double t) const;
  double d4(double t) const;
  double end_value() const { return eval(t1); }
  /// Exact integral of s over [t0, t1].
  double integral() const;
};

/// Piecewise-smooth nondecreasing crack length with speed bound mu and
/// higher-derivative bound M. Breakpoints between pieces form sing(s).
class LengthProfile {
 public:
  LengthProfile() = default;
  LengthProfile(std::vector<ProfilePiece> pieces, double mu, double M);

  static LengthProfile constant(double s0, double t0, double t1, double mu, double M);
  static LengthProfile linear(double s0, double rate, double t0, double t1, double mu, double M);
  /// Smoothstep rising so the peak tip speed equals `peak_speed`.
  static LengthProfile smoothstep(double s0, double peak_speed, double t0, double t1,
                                  double mu, double M);

  double t0() const { return pieces_.front().t0; }
  double t1() const { return pieces_.back().t1; }
  double mu() const { return mu_; }
  double M() const { return M_; }
  const std::vector<ProfilePiece>& pieces() const { return pieces_; }

  double eval(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double d3(double t) const;
  double integral(double ta, double tb) const;  // exact, piecewise closed form

  /// Interior breakpoints (the singular set).
  std::vector<double> sing() const;

  /// Concatenation; the appended profile must start where this one ends.
  LengthProfile concatenated(const LengthProfile& next) const;

 private:
  const ProfilePiece& piece_at(double t) const;
  std::vector<ProfilePiece> pieces_;
  double mu_ = 0, M_ = 0;
};

struct ProfileReport {
  bool pass = false;
  bool ok_monotone = true;
  bool ok_continuous = true;
  bool ok_speed = true;       // 0 <= s' <= mu
  bool ok_accel = true;       // |s''| <= M
  bool ok_jerk = true;        // |s'''| <= M
  bool ok_jerk_lipschitz = true;  // |s''''| <= M within pieces
  double max_speed = 0, max_accel = 0, max_jerk = 0, max_jerk_rate = 0;
  std::string detail;
};

/// Closed-form derivative bounds checked piecewise (dense sampling of the
/// exact derivatives plus endpoints), monotonicity and continuity globally.
ProfileReport validate_profile(const LengthProfile& p, int samples_per_piece = 1000,
                               double tol = 1e-9);

}  // namespace viscofrac
