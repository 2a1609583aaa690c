#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "viscofrac/domain.hpp"
#include "viscofrac/geometry.hpp"

namespace viscofrac {

/// Tangent direction and signed curvature data at the moving end of a path.
struct TipInfo {
  double phi = 0.0;     // tangent angle
  double kappa = 0.0;   // signed curvature
  double dkappa = 0.0;  // curvature derivative w.r.t. arc length
};

/// Arc-length-parameterized sampled curve with a regularity budget (r, L).
/// Samples sit at uniform spacing ds on [a0, b]; derivative tables up to
/// order three are finite-difference estimates on the sample grid.
class CrackPath {
 public:
  CrackPath() = default;

  double a0() const { return a0_; }
  double b() const { return b_; }
  double ds() const { return ds_; }
  double r() const { return r_; }
  double L() const { return L_; }
  std::size_t size() const { return pts_.size(); }
  const std::vector<Vec2>& samples() const { return pts_; }
  double arc_of(std::size_t i) const { return a0_ + static_cast<double>(i) * ds_; }
  const TipInfo& tip() const { return tip_; }

  /// Position at arc parameter s (clamped to [a0, b]); local quintic
  /// interpolation of the samples.
  Vec2 eval(double s) const;
  Vec2 deriv1(double s) const;
  Vec2 deriv2(double s) const;
  Vec2 deriv3(double s) const;
  Vec2 tangent(double s) const;  // deriv1 normalized

  const std::vector<Vec2>& d1_table() const { return d1_; }
  const std::vector<Vec2>& d2_table() const { return d2_; }
  const std::vector<Vec2>& d3_table() const { return d3_; }

  /// Arc parameter of the point of the curve closest to y, restricted to
  /// [lo, hi]; Newton refinement seeded from the nearest sample.
  double project(const Vec2& y, double lo, double hi) const;

  /// Straight segment from `mouth` in direction `dir` (unit not required).
  static CrackPath straight(Vec2 mouth, Vec2 dir, double a0, double b,
                            double r, double L, double ds_target);

  /// Integrate a curvature profile kappa(arc - a0) from `start` with initial
  /// tangent angle phi0. Produces an exactly unit-speed sample set.
  static CrackPath from_curvature(Vec2 start, double phi0, double a0, double b,
                                  const std::function<double(double)>& kappa,
                                  const std::function<double(double)>& dkappa,
                                  double r, double L, double ds_target);

  static CrackPath from_samples(std::vector<Vec2> pts, double a0, double ds,
                                double r, double L);

  /// New path truncated at arc s_cut (resampled to near-original spacing).
  CrackPath truncated(double s_cut) const;

  /// Append an arc of given length whose curvature follows the supplied
  /// profile (argument measured from the current tip). Keeps ds; the length
  /// is rounded up to a whole number of samples. Budget (r, L) unchanged
  /// unless overridden.
  CrackPath extended_by_curvature(double length,
                                  const std::function<double(double)>& kappa,
                                  const std::function<double(double)>& dkappa,
                                  double new_r = -1, double new_L = -1) const;

  /// Kink-style extension: blends the curvature from the current tip value to
  /// a constant target so the total tangent turn over `length` equals
  /// `theta`. Returns nothing when the required curvature exceeds the cap.
  std::optional<CrackPath> extended_with_kink(double theta, double length,
                                              double curvature_cap) const;

 private:
  void finalize();  // derivative tables + tip estimates

  std::vector<Vec2> pts_;
  std::vector<Vec2> d1_, d2_, d3_;
  double a0_ = 0, b_ = 0, ds_ = 0, r_ = 0, L_ = 0;
  TipInfo tip_;
  bool tip_analytic_ = false;
};

struct PathValidateOptions {
  double tol_unit = 5e-3;        // |gamma'| - 1
  double tol_initial = 1e-7;     // agreement with the fixed initial curve
  double tol_third_rel = 0.05;   // slack on the L bound and its Lipschitz form
  double tol_third_abs = 1e-6;
  double clearance_slack = 1e-9;
};

/// Per-condition diagnostics for admissibility of a crack path.
struct PathReport {
  bool pass = false;
  bool ok_initial = true;    // matches gamma0 on [a0, 0] (skipped when absent)
  bool ok_unit_speed = true;
  bool ok_disks = true;      // tangent disks of radius r avoid the curve
  bool ok_clearance = true;  // dist(gamma([0,b]), boundary) >= 2r
  bool ok_third = true;      // |gamma'''| <= L and L-Lipschitz
  bool ok_simple = true;     // no self-intersection among sample segments
  double worst_unit_speed = 0.0;
  double worst_disk_depth = 0.0;   // deepest penetration into a tangent disk
  double min_boundary_dist = 0.0;
  double worst_third = 0.0;
  double worst_third_lip = 0.0;
  int bad_segment_a = -1, bad_segment_b = -1;  // first intersecting pair
  std::string detail;
};

/// Check conditions (a)-(e) of the admissible-path class plus simplicity.
/// `domain` may be null (clearance skipped), `gamma0` may be null (initial
/// agreement skipped).
PathReport validate_path(const CrackPath& path, const DomainSpec* domain,
                         const CrackPath* gamma0 = nullptr,
                         const PathValidateOptions& opt = {});

/// Path extension beyond the current end: third-order Taylor continuation of
/// the curvature, clamped to the relaxed budget (r/2, 2L). The result spans
/// [a0, b + r/2].
CrackPath extend_path(const CrackPath& path);

/// Plain-text polyline I/O: header with a0, b, r, L, then one
/// "arc_length x y" row per sample.
void save_path(const CrackPath& path, const std::string& file);
CrackPath load_path(const std::string& file);

}  // namespace viscofrac
