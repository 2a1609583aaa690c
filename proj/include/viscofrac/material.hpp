#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "viscofrac/geometry.hpp"
#include "viscofrac/kernels.hpp"

namespace viscofrac {

/// Pointwise linear map on 2x2 matrices; the general form used by the class
/// checker. Concrete built-in fields are isotropic.
using TensorFieldFn = std::function<Mat2(const Vec2&, const Mat2&)>;

/// Isotropic fourth-order tensor A |-> 2*mu*A_sym + lambda*tr(A)*I, constant
/// in space. Its exact ellipticity window on symmetric 2x2 matrices is
/// (2*mu, 2*mu + 2*lambda).
struct IsotropicTensor {
  double lame_mu = 0.0;
  double lame_lambda = 0.0;

  SymMat2 apply(const SymMat2& s) const {
    const double tr = lame_lambda * s.trace();
    return {2.0 * lame_mu * s.xx + tr, 2.0 * lame_mu * s.yy + tr, 2.0 * lame_mu * s.xy};
  }
  SymMat2 apply(const Mat2& a) const { return apply(sym(a)); }

  double window_lo() const { return 2.0 * lame_mu; }
  double window_hi() const { return 2.0 * lame_mu + 2.0 * lame_lambda; }

  kernels::IsoCoef coef() const { return {2.0 * lame_mu, lame_lambda}; }

  IsotropicTensor operator+(const IsotropicTensor& o) const {
    return {lame_mu + o.lame_mu, lame_lambda + o.lame_lambda};
  }

  TensorFieldFn as_field() const {
    const IsotropicTensor t = *this;
    return [t](const Vec2&, const Mat2& a) { return t.apply(a).full(); };
  }
};

IsotropicTensor make_isotropic(double lame_lambda, double lame_mu);

/// Elasticity + viscosity tensor fields with their shared ellipticity window.
/// Spatially constant by default; per-region overrides keyed by the mesh's
/// element region id.
struct MaterialModel {
  IsotropicTensor elastic;
  IsotropicTensor viscous;
  std::vector<IsotropicTensor> elastic_regions;  // index = region id; empty -> constant
  std::vector<IsotropicTensor> viscous_regions;

  double lambda = 0.0;   // lower ellipticity bound valid for both fields
  double Lambda = 0.0;   // upper bound

  const IsotropicTensor& elastic_at(int region) const {
    return elastic_regions.empty() ? elastic : elastic_regions.at(static_cast<std::size_t>(region));
  }
  const IsotropicTensor& viscous_at(int region) const {
    return viscous_regions.empty() ? viscous : viscous_regions.at(static_cast<std::size_t>(region));
  }
  IsotropicTensor combined_at(int region) const {
    return elastic_at(region) + viscous_at(region);
  }
  bool spatially_constant() const {
    return elastic_regions.empty() && viscous_regions.empty();
  }

  void compute_window();
};

MaterialModel make_material(double elastic_lambda, double elastic_mu,
                            double viscous_lambda, double viscous_mu);

/// Sampled verification of the tensor-class properties: symmetric range and
/// symmetrization invariance, major symmetry, and the two-sided ellipticity
/// bound against (lambda, Lambda).
struct TensorClassReport {
  bool pass = true;
  bool symmetry_ok = true;      // L(x)A = L(x)A_sym, result symmetric
  bool major_symmetry_ok = true;
  bool bounds_ok = true;
  double worst_violation = 0.0;  // largest violation magnitude over all samples
  double observed_lo = 0.0;      // min of (LA:A)/|A_sym|^2 over samples
  double observed_hi = 0.0;
};

TensorClassReport check_tensor_class(const TensorFieldFn& field, double lambda,
                                     double Lambda,
                                     const std::vector<Vec2>& sample_points,
                                     const std::vector<Mat2>& sample_matrices,
                                     double tol = 1e-9);

/// Default sample sets for class checking (deterministic).
std::vector<Vec2> default_sample_points(int n = 32, unsigned seed = 7);
std::vector<Mat2> default_sample_matrices(int n = 64, unsigned seed = 11);

}  // namespace viscofrac
