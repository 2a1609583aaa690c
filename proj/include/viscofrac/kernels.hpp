#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "viscofrac/geometry.hpp"

namespace viscofrac {

/// Structure-of-arrays field of symmetric 2x2 tensors, one per quadrature
/// point. The split component arrays keep the hot update/reduction loops
/// straight-line over contiguous doubles.
struct SymField {
  std::vector<double> xx, yy, xy;

  SymField() = default;
  explicit SymField(std::size_t n) { resize(n); }

  std::size_t size() const { return xx.size(); }
  void resize(std::size_t n) { xx.assign(n, 0.0); yy.assign(n, 0.0); xy.assign(n, 0.0); }

  SymMat2 get(std::size_t i) const { return {xx[i], yy[i], xy[i]}; }
  void set(std::size_t i, const SymMat2& m) { xx[i] = m.xx; yy[i] = m.yy; xy[i] = m.xy; }
};

namespace kernels {

/// Isotropic fourth-order tensor acting on symmetric matrices:
///   L S = mu2 * S + lam * tr(S) * I.
struct IsoCoef {
  double mu2 = 0.0;  // twice the shear modulus
  double lam = 0.0;
};

struct Ops {
  // y[i] += a * x[i]
  void (*axpy)(double* y, const double* x, double a, std::size_t n);
  // out[i] = u[i] + a*v[i] + b*w[i]
  void (*triad)(double* out, const double* u, double a, const double* v,
                double b, const double* w, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);

  // Exponential-kernel memory recursion, fused with the isotropic viscosity
  // application:  z <- decay*z + Iso(w0*s0 + w1*s1), componentwise over a run
  // of quadrature points.
  void (*memory_update_iso)(double* zxx, double* zyy, double* zxy,
                            const double* s0xx, const double* s0yy, const double* s0xy,
                            const double* s1xx, const double* s1yy, const double* s1xy,
                            double decay, double w0, double w1, IsoCoef c,
                            std::size_t n);

  // sum_i w[i] * (Iso(s_i) : s_i)
  double (*quad_form_iso)(const double* w,
                          const double* sxx, const double* syy, const double* sxy,
                          IsoCoef c, std::size_t n);

  // sum_i w[i] * (a_i : b_i)   (symmetric-tensor inner product)
  double (*quad_inner)(const double* w,
                       const double* axx, const double* ayy, const double* axy,
                       const double* bxx, const double* byy, const double* bxy,
                       std::size_t n);
};

/// Portable reference kernels.
const Ops& scalar_ops();
/// AVX2 kernels; only valid to call when the CPU supports AVX2.
const Ops& avx2_ops();

/// Kernels selected for the running CPU (AVX2 when available, otherwise the
/// scalar reference). Selection happens once, at first use.
const Ops& active_ops();
/// Name of the active backend ("scalar" or "avx2"), for run manifests.
std::string active_backend();

/// Closed-form weights of the exponential-kernel recursion over a step of
/// length d, exact for strain linear in time:
///   z(t+d) = e^{-d} z(t) + V[w0 * Eu(t) + w1 * Eu(t+d)].
struct MemoryWeights {
  double decay, w0, w1;
};
MemoryWeights memory_weights(double dt);

}  // namespace kernels
}  // namespace viscofrac
