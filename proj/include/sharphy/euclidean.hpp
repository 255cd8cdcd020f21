#pragma once

// Radial profiles on C, the radial (Hankel) realization of the 2-D Fourier
// transform, and the closed-form Gaussian Hausdorff-Young ratios.

#include "sharphy/exponents.hpp"
#include "sharphy/grid.hpp"
#include "sharphy/specfun.hpp"

namespace sharphy::euclidean {

// A radial function r -> f0(r) together with the truncation radius beyond
// which it is numerically negligible (exact support, or the radius where a
// decay-tagged profile falls below ~1e-18 of its scale).
struct RadialProfile {
  std::function<cplx(double)> eval;
  double support_radius = 1.0;
};

struct GaussianSpec {
  double t = 1.0;  // shape of e^{-pi t |x|^2}
  int dim = 1;
};

inline RadialProfile radial_gaussian(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("radial_gaussian: t must be positive");
  double r = std::sqrt(42.0 / (kPi * t));  // e^{-pi t r^2} = e^{-42} there
  return {[t](double rr) { return cplx(std::exp(-kPi * t * rr * rr)); }, r};
}

inline RadialProfile radial_chi(int k) {
  return {[k](double r) { return cplx(specfun::chi_radial(k, r)); },
          specfun::chi_support_radius(k)};
}

inline RadialProfile radial_disc(double radius) {
  return {[radius](double r) { return cplx(r <= radius ? 1.0 : 0.0); }, radius};
}

// Sample table + cubic (Catmull-Rom) interpolation on a uniform r-grid.
inline RadialProfile radial_table(std::vector<cplx> values, double r_spacing) {
  if (values.size() < 4) throw std::invalid_argument("radial_table: need >= 4 samples");
  double support = r_spacing * (values.size() - 1);
  auto eval = [values = std::move(values), r_spacing](double r) -> cplx {
    double u = r / r_spacing;
    auto n = static_cast<long>(values.size());
    if (u >= n - 1 || r < 0.0) return 0.0;
    long i = std::clamp(static_cast<long>(std::floor(u)), 1l, n - 3);
    double s = u - i;
    cplx p0 = values[i - 1], p1 = values[i], p2 = values[i + 1], p3 = values[i + 2];
    return p1 + 0.5 * s * (p2 - p0 + s * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                          s * (3.0 * (p1 - p2) + p3 - p0)));
  };
  return {std::move(eval), support};
}

// ghat(zeta) = 2 pi int_0^inf g0(r) J_0(2 pi zeta r) r dr.
inline cplx radial_hat(const RadialProfile& f0, double zeta) {
  if (zeta < 0.0) throw std::invalid_argument("radial_hat: zeta must be >= 0");
  const double rmax = f0.support_radius;
  // one panel per quarter-oscillation of the integrand, at least 64
  int start = 64 + static_cast<int>(8.0 * (zeta * rmax + kPi * rmax * rmax));
  auto integrand = [&](double r) { return f0.eval(r) * (specfun::bessel_j(0.0, 2.0 * kPi * zeta * r) * r); };
  return 2.0 * kPi * sharphy::detail::integrate(integrand, 0.0, rmax, 1e-10, start, 1 << 22);
}

// ||fhat||_{p'} / ||f||_p for f = e^{-pi t |x|^2} from closed forms; equals
// B_p^dim identically in t.
inline double gaussian_hy_ratio(const GaussianSpec& spec, double p) {
  if (!(spec.t > 0.0)) throw std::invalid_argument("gaussian_hy_ratio: t must be positive");
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("gaussian_hy_ratio: p must lie in (1,2]");
  const double d = spec.dim;
  const double t = spec.t;
  // ||f||_p = (p t)^{-d/(2p)},  fhat = t^{-d/2} e^{-pi |xi|^2 / t}
  double fnorm = std::pow(p * t, -d / (2.0 * p));
  exponents::Exponent ex(p);
  if (ex.conjugate_is_infinite()) return std::pow(t, -d / 2.0) / fnorm;
  double pp = ex.conjugate();
  double fhat_norm = std::pow(t, -d / 2.0) * std::pow(pp / t, -d / (2.0 * pp));
  return fhat_norm / fnorm;
}

// Grid-quadrature Hausdorff-Young ratio for an arbitrary grid function.
inline double grid_hy_ratio(const GridFunction& f, double p) {
  exponents::Exponent ex(p);
  GridFunction fh = fourier_transform(f);
  double num = ex.conjugate_is_infinite() ? lp_norm(fh, kInf) : lp_norm(fh, ex.conjugate());
  return num / lp_norm(f, p);
}

}  // namespace sharphy::euclidean

namespace sharphy::specfun {

struct ChFtResult {
  double fitted_constant = 0.0;  // c in chi_k(z) ~ c (-1)^k chihat_k(z/2)
  double residual = 0.0;         // relative L^2 misfit over the grid
};

// Determines the proportionality constant in the chi_k self-reciprocity under
// the Fourier transform by least squares over a 2-D grid.  The identity fixes
// c = 1/2; the residual certifies the grid resolution.
inline ChFtResult verify_ch_ft(int k, double half_width = 6.0, int n = 192) {
  if (k < 0 || k > 15) throw std::invalid_argument("verify_ch_ft: need 0 <= k <= 15");
  auto f = euclidean::make_grid_2d(half_width, n, [k](cplx z) { return chi(k, z); });
  std::vector<double> halves(n);
  for (int i = 0; i < n; ++i) halves[i] = f.coord(i) / 2.0;
  Eigen::MatrixXcd hat = euclidean::fourier_transform_at(f, halves);
  double num = 0.0, den = 0.0, ref = 0.0;
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double lhs = f.at(a, b).real();
      double rhs = sign * hat(a, b).real();
      num += rhs * lhs;
      den += rhs * rhs;
      ref += lhs * lhs;
    }
  ChFtResult out;
  out.fitted_constant = num / den;
  double mis = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double d = f.at(a, b).real() - out.fitted_constant * sign * hat(a, b).real();
      mis += d * d;
    }
  out.residual = std::sqrt(mis / ref);
  if (out.residual > 1e-3)
    throw GridResolutionError("verify_ch_ft: residual above 1e-3 at this grid");
  return out;
}

}  // namespace sharphy::specfun
