#include "viscofrac/length_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace viscofrac {

std::string to_string(ProfileShape s) {
  switch (s) {
    case ProfileShape::Constant: return "constant";
    case ProfileShape::Linear: return "linear";
    case ProfileShape::Smoothstep: return "smoothstep";
  }
  return "?";
}

ProfileShape profile_shape_from_string(const std::string& s) {
  if (s == "constant") return ProfileShape::Constant;
  if (s == "linear") return ProfileShape::Linear;
  if (s == "smoothstep") return ProfileShape::Smoothstep;
  throw std::invalid_argument("unknown profile shape: " + s);
}

double ProfilePiece::eval(double t) const {
  switch (shape) {
    case ProfileShape::Constant: return s0;
    case ProfileShape::Linear: return s0 + rate * (t - t0);
    case ProfileShape::Smoothstep: return s0 + delta * smoothstep5((t - t0) / (t1 - t0));
  }
  return s0;
}

double ProfilePiece::d1(double t) const {
  switch (shape) {
    case ProfileShape::Constant: return 0.0;
    case ProfileShape::Linear: return rate;
    case ProfileShape::Smoothstep: {
      const double T = t1 - t0;
      return delta * smoothstep5_d1((t - t0) / T) / T;
    }
  }
  return 0.0;
}

double ProfilePiece::d2(double t) const {
  if (shape != ProfileShape::Smoothstep) return 0.0;
  const double T = t1 - t0;
  return delta * smoothstep5_d2((t - t0) / T) / (T * T);
}

double ProfilePiece::d3(double t) const {
  if (shape != ProfileShape::Smoothstep) return 0.0;
  const double T = t1 - t0;
  return delta * smoothstep5_d3((t - t0) / T) / (T * T * T);
}

double ProfilePiece::d4(double t) const {
  if (shape != ProfileShape::Smoothstep) return 0.0;
  const double T = t1 - t0;
  const double u = (t - t0) / T;
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return delta * (720.0 * u - 360.0) / (T * T * T * T);
}

double ProfilePiece::integral() const {
  const double T = t1 - t0;
  switch (shape) {
    case ProfileShape::Constant: return s0 * T;
    case ProfileShape::Linear: return s0 * T + 0.5 * rate * T * T;
    case ProfileShape::Smoothstep: return s0 * T + 0.5 * delta * T;  // int of S5 is 1/2
  }
  return s0 * T;
}

LengthProfile::LengthProfile(std::vector<ProfilePiece> pieces, double mu, double M)
    : pieces_(std::move(pieces)), mu_(mu), M_(M) {
  if (pieces_.empty()) throw std::invalid_argument("length profile: no pieces");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (std::abs(pieces_[i].t1 - pieces_[i + 1].t0) > 1e-12)
      throw std::invalid_argument("length profile: pieces must tile the interval");
  }
}

LengthProfile LengthProfile::constant(double s0, double t0, double t1, double mu, double M) {
  ProfilePiece p{ProfileShape::Constant, t0, t1, s0, 0, 0};
  return LengthProfile({p}, mu, M);
}

LengthProfile LengthProfile::linear(double s0, double rate, double t0, double t1,
                                    double mu, double M) {
  ProfilePiece p{ProfileShape::Linear, t0, t1, s0, rate, 0};
  return LengthProfile({p}, mu, M);
}

LengthProfile LengthProfile::smoothstep(double s0, double peak_speed, double t0, double t1,
                                        double mu, double M) {
  ProfilePiece p{ProfileShape::Smoothstep, t0, t1, s0, 0,
                 peak_speed * (t1 - t0) * 8.0 / 15.0};
  return LengthProfile({p}, mu, M);
}

const ProfilePiece& LengthProfile::piece_at(double t) const {
  for (const auto& p : pieces_)
    if (t <= p.t1 + 1e-14) return p;
  return pieces_.back();
}

double LengthProfile::eval(double t) const { return piece_at(t).eval(std::clamp(t, t0(), t1())); }
double LengthProfile::d1(double t) const { return piece_at(t).d1(t); }
double LengthProfile::d2(double t) const { return piece_at(t).d2(t); }
double LengthProfile::d3(double t) const { return piece_at(t).d3(t); }

double LengthProfile::integral(double ta, double tb) const {
  double acc = 0.0;
  for (const auto& p : pieces_) {
    const double lo = std::max(ta, p.t0);
    const double hi = std::min(tb, p.t1);
    if (hi <= lo) continue;
    if (lo == p.t0 && hi == p.t1) {
      acc += p.integral();
    } else {
      // clipped piece: integrate the closed form by Gauss-Legendre 5
      static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                   0.5384693101056831, 0.9061798459386640};
      static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                   0.4786286704993665, 0.2369268850561891};
      const double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
      for (int k = 0; k < 5; ++k) acc += hw * gw[k] * p.eval(c + hw * gx[k]);
    }
  }
  return acc;
}

std::vector<double> LengthProfile::sing() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) out.push_back(pieces_[i].t1);
  return out;
}

LengthProfile LengthProfile::concatenated(const LengthProfile& next) const {
  if (std::abs(next.t0() - t1()) > 1e-12)
    throw std::invalid_argument("profile concatenation: time gap");
  if (std::abs(next.eval(next.t0()) - eval(t1())) > 1e-9)
    throw std::invalid_argument("profile concatenation: value jump");
  std::vector<ProfilePiece> ps = pieces_;
  ps.insert(ps.end(), next.pieces_.begin(), next.pieces_.end());
  return LengthProfile(std::move(ps), std::max(mu_, next.mu_), std::max(M_, next.M_));
}

ProfileReport validate_profile(const LengthProfile& p, int samples_per_piece, double tol) {
  if (!(p.t1() > p.t0()))
    throw std::invalid_argument("validate_profile: empty time interval");
  ProfileReport rep;
  double prev_end = p.eval(p.t0());
  for (const auto& piece : p.pieces()) {
    if (piece.t0 < p.t0() - 1e-12 || piece.t1 > p.t1() + 1e-12)
      throw std::invalid_argument("validate_profile: breakpoint outside interval");
    if (std::abs(piece.eval(piece.t0) - prev_end) > tol) rep.ok_continuous = false;
    prev_end = piece.end_value();
    for (int k = 0; k <= samples_per_piece; ++k) {
      const double t = piece.t0 + (piece.t1 - piece.t0) * k / samples_per_piece;
      const double v = piece.d1(t);
      rep.max_speed = std::max(rep.max_speed, v);
      if (v < -tol) rep.ok_monotone = false;
      rep.max_accel = std::max(rep.max_accel, std::abs(piece.d2(t)));
      rep.max_jerk = std::max(rep.max_jerk, std::abs(piece.d3(t)));
      rep.max_jerk_rate = std::max(rep.max_jerk_rate, std::abs(piece.d4(t)));
    }
  }
  if (rep.max_speed > p.mu() + tol) rep.ok_speed = false;
  if (rep.max_accel > p.M() + tol) rep.ok_accel = false;
  if (rep.max_jerk > p.M() + tol) rep.ok_jerk = false;
  if (rep.max_jerk_rate > p.M() + tol) rep.ok_jerk_lipschitz = false;
  rep.pass = rep.ok_monotone && rep.ok_continuous && rep.ok_speed && rep.ok_accel &&
             rep.ok_jerk && rep.ok_jerk_lipschitz;
  if (!rep.pass) rep.detail = "bound violated";
  return rep;
}

}  // namespace viscofrac
