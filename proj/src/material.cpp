#include "viscofrac/material.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace viscofrac {

IsotropicTensor make_isotropic(double lame_lambda, double lame_mu) {
  if (!(lame_mu > 0.0))
    throw std::invalid_argument("make_isotropic: shear modulus must be positive");
  if (lame_lambda < 0.0)
    throw std::invalid_argument("make_isotropic: first Lame parameter must be nonnegative");
  return {lame_mu, lame_lambda};
}

void MaterialModel::compute_window() {
  double lo = std::min(elastic.window_lo(), viscous.window_lo());
  double hi = std::max(elastic.window_hi(), viscous.window_hi());
  for (const auto& t : elastic_regions) {
    lo = std::min(lo, t.window_lo());
    hi = std::max(hi, t.window_hi());
  }
  for (const auto& t : viscous_regions) {
    lo = std::min(lo, t.window_lo());
    hi = std::max(hi, t.window_hi());
  }
  lambda = lo;
  Lambda = hi;
}

MaterialModel make_material(double elastic_lambda, double elastic_mu,
                            double viscous_lambda, double viscous_mu) {
  MaterialModel m;
  m.elastic = make_isotropic(elastic_lambda, elastic_mu);
  m.viscous = make_isotropic(viscous_lambda, viscous_mu);
  m.compute_window();
  return m;
}

TensorClassReport check_tensor_class(const TensorFieldFn& field, double lambda,
                                     double Lambda,
                                     const std::vector<Vec2>& sample_points,
                                     const std::vector<Mat2>& sample_matrices,
                                     double tol) {
  if (sample_points.empty() || sample_matrices.empty())
    throw std::invalid_argument("check_tensor_class: empty sample set");

  TensorClassReport rep;
  rep.observed_lo = std::numeric_limits<double>::infinity();
  rep.observed_hi = -std::numeric_limits<double>::infinity();

  auto note = [&rep](bool& flag, double v) {
    if (v > rep.worst_violation) rep.worst_violation = v;
    flag = false;
    rep.pass = false;
  };

  for (const Vec2& x : sample_points) {
    std::vector<Mat2> images(sample_matrices.size());
    for (std::size_t i = 0; i < sample_matrices.size(); ++i) {
      const Mat2& a = sample_matrices[i];
      const Mat2 la = field(x, a);
      images[i] = la;

      // range symmetry and symmetrization invariance
      const double skew = std::abs(la.a12 - la.a21);
      if (skew > tol) note(rep.symmetry_ok, skew);
      const Mat2 las = field(x, sym(a).full());
      const double dsym = std::sqrt(ddot(la - las, la - las));
      if (dsym > tol) note(rep.symmetry_ok, dsym);

      // ellipticity on the Rayleigh quotient (LA:A)/|A_sym|^2
      const double as2 = sym(a).norm2();
      if (as2 > 1e-14) {
        const double q = ddot(la, a) / as2;
        rep.observed_lo = std::min(rep.observed_lo, q);
        rep.observed_hi = std::max(rep.observed_hi, q);
        if (q < lambda - tol) note(rep.bounds_ok, lambda - q);
        if (q > Lambda + tol) note(rep.bounds_ok, q - Lambda);
      }
    }
    // major symmetry: L A : B = L B : A
    for (std::size_t i = 0; i < sample_matrices.size(); ++i)
      for (std::size_t j = i + 1; j < sample_matrices.size(); ++j) {
        const double d =
            std::abs(ddot(images[i], sample_matrices[j]) - ddot(images[j], sample_matrices[i]));
        if (d > tol) note(rep.major_symmetry_ok, d);
      }
  }
  return rep;
}

std::vector<Vec2> default_sample_points(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

std::vector<Mat2> default_sample_matrices(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Mat2> ms(static_cast<std::size_t>(n));
  for (auto& m : ms) m = {u(rng), u(rng), u(rng), u(rng)};
  return ms;
}

}  // namespace viscofrac
