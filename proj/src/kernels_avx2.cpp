// AVX2 variants of the array kernels. Built with -mavx2 in its own
// translation unit; callers go through the runtime dispatch table, so these
// are never executed on CPUs without AVX2.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "viscofrac/kernels.hpp"

namespace viscofrac::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

void axpy_v(double* y, const double* x, double a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void triad_v(double* out, const double* u, double a, const double* v,
             double b, const double* w, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_add_pd(_mm256_loadu_pd(u + i),
                              _mm256_mul_pd(va, _mm256_loadu_pd(v + i)));
    t = _mm256_add_pd(t, _mm256_mul_pd(vb, _mm256_loadu_pd(w + i)));
    _mm256_storeu_pd(out + i, t);
  }
  for (; i < n; ++i) out[i] = u[i] + a * v[i] + b * w[i];
}

double dot_v(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                           _mm256_loadu_pd(y + i)));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void memory_update_iso_v(double* zxx, double* zyy, double* zxy,
                         const double* s0xx, const double* s0yy, const double* s0xy,
                         const double* s1xx, const double* s1yy, const double* s1xy,
                         double decay, double w0, double w1, IsoCoef c,
                         std::size_t n) {
  const __m256d vd = _mm256_set1_pd(decay);
  const __m256d v0 = _mm256_set1_pd(w0);
  const __m256d v1 = _mm256_set1_pd(w1);
  const __m256d vdl = _mm256_set1_pd(c.mu2 + c.lam);
  const __m256d vl = _mm256_set1_pd(c.lam);
  const __m256d vm = _mm256_set1_pd(c.mu2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sxx = _mm256_add_pd(_mm256_mul_pd(v0, _mm256_loadu_pd(s0xx + i)),
                                      _mm256_mul_pd(v1, _mm256_loadu_pd(s1xx + i)));
    const __m256d syy = _mm256_add_pd(_mm256_mul_pd(v0, _mm256_loadu_pd(s0yy + i)),
                                      _mm256_mul_pd(v1, _mm256_loadu_pd(s1yy + i)));
    const __m256d sxy = _mm256_add_pd(_mm256_mul_pd(v0, _mm256_loadu_pd(s0xy + i)),
                                      _mm256_mul_pd(v1, _mm256_loadu_pd(s1xy + i)));
    __m256d z;
    z = _mm256_add_pd(_mm256_mul_pd(vd, _mm256_loadu_pd(zxx + i)),
                      _mm256_add_pd(_mm256_mul_pd(vdl, sxx), _mm256_mul_pd(vl, syy)));
    _mm256_storeu_pd(zxx + i, z);
    z = _mm256_add_pd(_mm256_mul_pd(vd, _mm256_loadu_pd(zyy + i)),
                      _mm256_add_pd(_mm256_mul_pd(vl, sxx), _mm256_mul_pd(vdl, syy)));
    _mm256_storeu_pd(zyy + i, z);
    z = _mm256_add_pd(_mm256_mul_pd(vd, _mm256_loadu_pd(zxy + i)),
                      _mm256_mul_pd(vm, sxy));
    _mm256_storeu_pd(zxy + i, z);
  }
  const double dl = c.mu2 + c.lam;
  for (; i < n; ++i) {
    const double sxx = w0 * s0xx[i] + w1 * s1xx[i];
    const double syy = w0 * s0yy[i] + w1 * s1yy[i];
    const double sxy = w0 * s0xy[i] + w1 * s1xy[i];
    zxx[i] = decay * zxx[i] + dl * sxx + c.lam * syy;
    zyy[i] = decay * zyy[i] + c.lam * sxx + dl * syy;
    zxy[i] = decay * zxy[i] + c.mu2 * sxy;
  }
}

double quad_form_iso_v(const double* w,
                       const double* sxx, const double* syy, const double* sxy,
                       IsoCoef c, std::size_t n) {
  const __m256d vdl = _mm256_set1_pd(c.mu2 + c.lam);
  const __m256d vl = _mm256_set1_pd(c.lam);
  const __m256d vm2 = _mm256_set1_pd(2.0 * c.mu2);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xx = _mm256_loadu_pd(sxx + i);
    const __m256d yy = _mm256_loadu_pd(syy + i);
    const __m256d xy = _mm256_loadu_pd(sxy + i);
    const __m256d lxx = _mm256_add_pd(_mm256_mul_pd(vdl, xx), _mm256_mul_pd(vl, yy));
    const __m256d lyy = _mm256_add_pd(_mm256_mul_pd(vl, xx), _mm256_mul_pd(vdl, yy));
    __m256d q = _mm256_add_pd(_mm256_mul_pd(lxx, xx), _mm256_mul_pd(lyy, yy));
    q = _mm256_add_pd(q, _mm256_mul_pd(vm2, _mm256_mul_pd(xy, xy)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), q));
  }
  double s = hsum(acc);
  const double dl = c.mu2 + c.lam;
  for (; i < n; ++i) {
    const double lxx = dl * sxx[i] + c.lam * syy[i];
    const double lyy = c.lam * sxx[i] + dl * syy[i];
    s += w[i] * (lxx * sxx[i] + lyy * syy[i] + 2.0 * c.mu2 * sxy[i] * sxy[i]);
  }
  return s;
}

double quad_inner_v(const double* w,
                    const double* axx, const double* ayy, const double* axy,
                    const double* bxx, const double* byy, const double* bxy,
                    std::size_t n) {
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d q = _mm256_mul_pd(_mm256_loadu_pd(axx + i), _mm256_loadu_pd(bxx + i));
    q = _mm256_add_pd(q, _mm256_mul_pd(_mm256_loadu_pd(ayy + i), _mm256_loadu_pd(byy + i)));
    q = _mm256_add_pd(q, _mm256_mul_pd(two, _mm256_mul_pd(_mm256_loadu_pd(axy + i),
                                                          _mm256_loadu_pd(bxy + i))));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), q));
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += w[i] * (axx[i] * bxx[i] + ayy[i] * byy[i] + 2.0 * axy[i] * bxy[i]);
  return s;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{axpy_v, triad_v, dot_v, memory_update_iso_v,
                       quad_form_iso_v, quad_inner_v};
  return ops;
}

}  // namespace viscofrac::kernels

#endif  // x86-64
