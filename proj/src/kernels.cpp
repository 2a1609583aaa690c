#include "viscofrac/kernels.hpp"

#include <cmath>

namespace viscofrac::kernels {

namespace {

const Ops* select_ops() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
  return &scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops* ops = select_ops();
  return *ops;
}

std::string active_backend() {
  return &active_ops() == &scalar_ops() ? "scalar" : "avx2";
}

MemoryWeights memory_weights(double dt) {
  // w1 = 1 - (1 - e^{-d})/d,  w0 = (1 - e^{-d}) - w1, from integrating the
  // linear interpolant against e^{sigma-d} over [0, d]. Series for small d
  // avoids the cancellation in w0.
  MemoryWeights w;
  w.decay = std::exp(-dt);
  if (dt < 1e-4) {
    const double d = dt;
    w.w1 = d * (0.5 - d * (1.0 / 6.0 - d / 24.0));
    w.w0 = d * (0.5 - d * (1.0 / 3.0 - d / 8.0));
    return w;
  }
  const double em = -std::expm1(-dt);  // 1 - e^{-dt}
  w.w1 = 1.0 - em / dt;
  w.w0 = em - w.w1;
  return w;
}

}  // namespace viscofrac::kernels
