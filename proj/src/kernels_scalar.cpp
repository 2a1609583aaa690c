#include "viscofrac/kernels.hpp"

namespace viscofrac::kernels {
namespace {

void axpy_s(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void triad_s(double* out, const double* u, double a, const double* v,
             double b, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] + a * v[i] + b * w[i];
}

double dot_s(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void memory_update_iso_s(double* zxx, double* zyy, double* zxy,
                         const double* s0xx, const double* s0yy, const double* s0xy,
                         const double* s1xx, const double* s1yy, const double* s1xy,
                         double decay, double w0, double w1, IsoCoef c,
                         std::size_t n) {
  const double d = c.mu2 + c.lam;
  for (std::size_t i = 0; i < n; ++i) {
    const double sxx = w0 * s0xx[i] + w1 * s1xx[i];
    const double syy = w0 * s0yy[i] + w1 * s1yy[i];
    const double sxy = w0 * s0xy[i] + w1 * s1xy[i];
    zxx[i] = decay * zxx[i] + d * sxx + c.lam * syy;
    zyy[i] = decay * zyy[i] + c.lam * sxx + d * syy;
    zxy[i] = decay * zxy[i] + c.mu2 * sxy;
  }
}

double quad_form_iso_s(const double* w,
                       const double* sxx, const double* syy, const double* sxy,
                       IsoCoef c, std::size_t n) {
  const double d = c.mu2 + c.lam;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lxx = d * sxx[i] + c.lam * syy[i];
    const double lyy = c.lam * sxx[i] + d * syy[i];
    const double lxy = c.mu2 * sxy[i];
    acc += w[i] * (lxx * sxx[i] + lyy * syy[i] + 2.0 * lxy * sxy[i]);
  }
  return acc;
}

double quad_inner_s(const double* w,
                    const double* axx, const double* ayy, const double* axy,
                    const double* bxx, const double* byy, const double* bxy,
                    std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * (axx[i] * bxx[i] + ayy[i] * byy[i] + 2.0 * axy[i] * bxy[i]);
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{axpy_s, triad_s, dot_s, memory_update_iso_s,
                       quad_form_iso_s, quad_inner_s};
  return ops;
}

}  // namespace viscofrac::kernels
