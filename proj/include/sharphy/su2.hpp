#pragma once

// Central-function calculus on SU(2): Weyl integration against (2/pi) sin^2,
// character coefficients tilde f(lambda), the central Fourier-Lebesgue norm
// sum d^{2-q} |tilde f|^q, the Lie-algebra lift F = J^{1/2} f(exp .), the
// Kirillov orbit identity, and local central Hausdorff-Young ratios.
//
// Radial scale: theta = c |X| with c = (2 pi^2)^{1/3}.  This is the unique
// scale for which mass-one Haar measure matches Lebesgue measure on the Lie
// algebra (J(0) = 1 in the measure sense), making ||F||_2 = ||f||_2 and
// tilde f(lambda) = d_lambda Fhat(rho_lambda) exact with orbit radii
// rho_lambda = (lambda + 1) c / (2 pi) = (lambda + 1) (4 pi)^{-1/3}.

#include "sharphy/euclidean.hpp"
#include "sharphy/exponents.hpp"

namespace sharphy::su2 {

inline constexpr double kRadialScale = 2.7025676900634902;   // (2 pi^2)^{1/3}
inline constexpr double kOrbitSpacing = 0.43012700691404981; // (4 pi)^{-1/3} = c/(2 pi)

// A central function, given by its conjugacy-class profile g(theta) on
// [0, pi), vanishing for theta >= delta.
struct CentralFunction {
  std::function<cplx(double)> g;
  double delta = 1.0;
  void validate() const {
    if (!(delta > 0.0 && delta < kPi))
      throw std::invalid_argument("CentralFunction: delta must lie in (0, pi)");
  }
};

struct WeightData {
  int lambda = 0;
  int dimension() const { return lambda + 1; }
  static constexpr int rho_shift = 1;
};

template <typename F>
CentralFunction make_central(F&& g, double delta) {
  CentralFunction f;
  f.g = [g = std::forward<F>(g), delta](double th) -> cplx {
    return (th < delta) ? cplx(g(th)) : cplx(0.0);
  };
  f.delta = delta;
  f.validate();
  return f;
}

// Gaussian-in-theta profile, hard-truncated at delta (width = delta/3 keeps
// the truncation below e^{-9}).
inline CentralFunction central_gaussian(double delta, double width_frac = 1.0 / 3.0) {
  double w = delta * width_frac;
  return make_central([w](double th) { return std::exp(-sharphy::detail::sq(th / w)); }, delta);
}

// Profile whose Lie-algebra lift is an exact 3-D Gaussian:
// g(theta) = e^{-(theta/w)^2} * (theta / sin theta).
inline CentralFunction central_gaussian_lift(double delta, double width_frac = 1.0 / 3.0) {
  double w = delta * width_frac;
  return make_central(
      [w](double th) {
        double j = (th == 0.0) ? 1.0 : th / std::sin(th);
        return std::exp(-sharphy::detail::sq(th / w)) * j;
      },
      delta);
}

// int_G f = (2/pi) int_0^pi g(theta) sin^2(theta) dtheta (mass-one Haar).
inline cplx weyl_integral(const CentralFunction& f) {
  f.validate();
  auto integrand = [&](double th) { return f.g(th) * sharphy::detail::sq(std::sin(th)); };
  return (2.0 / kPi) *
         sharphy::detail::integrate(integrand, 0.0, f.delta, 1e-13, 64);
}

inline double lp_norm(const CentralFunction& f, double p) {
  f.validate();
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  auto integrand = [&](double th) {
    return std::pow(std::abs(f.g(th)), p) * sharphy::detail::sq(std::sin(th));
  };
  double v = (2.0 / kPi) * sharphy::detail::integrate(integrand, 0.0, f.delta, 1e-13, 64);
  return std::pow(v, 1.0 / p);
}

// tilde f(lambda) = int_G f chi_lambda = (2/pi) int g(th) sin((l+1)th) sin th dth.
inline cplx central_ft(const CentralFunction& f, int lambda) {
  f.validate();
  if (lambda < 0) throw std::invalid_argument("central_ft: lambda must be >= 0");
  auto integrand = [&](double th) {
    return f.g(th) * std::sin((lambda + 1.0) * th) * std::sin(th);
  };
  int start = 64 + static_cast<int>(2.0 * (lambda + 1) * f.delta);
  return (2.0 / kPi) * sharphy::detail::integrate(integrand, 0.0, f.delta, 1e-13, start);
}

// ( sum_{l <= Lmax} d_l^{2-q} |tilde f(l)|^q )^{1/q}, d_l = l + 1.
inline double central_flq_norm(const CentralFunction& f, double q, int lambda_max = 200,
                               ConvergenceInfo* info = nullptr) {
  if (!(q >= 2.0)) throw std::invalid_argument("central_flq_norm: q must be >= 2");
  double sum = 0.0, last = 0.0;
  for (int l = 0; l <= lambda_max; ++l) {
    double d = l + 1.0;
    last = std::pow(d, 2.0 - q) * std::pow(std::abs(central_ft(f, l)), q);
    sum += last;
  }
  if (info) info->tail_warning = sum > 0.0 && last > 1e-12 * sum;
  return std::pow(sum, 1.0 / q);
}

// F_0(s) = sinc(c s) g(c s) on s < delta/c; the lift F(X) = J(X)^{1/2} f(exp X)
// satisfies ||F||_2 = ||f||_2 in this scale.
inline euclidean::RadialProfile lie_algebra_lift(const CentralFunction& f) {
  f.validate();
  auto g = f.g;
  double delta = f.delta;
  auto eval = [g, delta](double s) -> cplx {
    double th = kRadialScale * s;
    if (th >= delta) return 0.0;
    double sinc = (th == 0.0) ? 1.0 : std::sin(th) / th;
    return sinc * g(th);
  };
  return {std::move(eval), f.delta / kRadialScale};
}

// 3-D radial Fourier transform Fhat(r) = (2/r) int_0^inf F0(s) sin(2 pi r s) s ds.
inline cplx radial_hat_3d(const euclidean::RadialProfile& f0, double r) {
  if (!(r > 0.0)) {
    auto integrand0 = [&](double s) { return f0.eval(s) * (4.0 * kPi * s * s); };
    return sharphy::detail::integrate(integrand0, 0.0, f0.support_radius, 1e-13, 64);
  }
  auto integrand = [&](double s) { return f0.eval(s) * (std::sin(2.0 * kPi * r * s) * s); };
  int start = 64 + static_cast<int>(8.0 * r * f0.support_radius);
  return (2.0 / r) *
         sharphy::detail::integrate(integrand, 0.0, f0.support_radius, 1e-14, start);
}

// Orbit radius attached to the dominant weight lambda.
inline double orbit_radius(int lambda) { return (lambda + 1.0) * kOrbitSpacing; }

// Max residual of the orbit identity J^{1/2}(X) chi_lambda(exp X) =
// sigma-hat(X) over the supplied radii; exact in these conventions, so the
// residual certifies the plumbing.
inline double kirillov_check(int lambda, const std::vector<double>& s_list) {
  if (lambda < 0) throw std::invalid_argument("kirillov_check: lambda must be >= 0");
  double worst = 0.0;
  for (double s : s_list) {
    double th = kRadialScale * s;
    if (!(th > 0.0 && th < kPi))
      throw std::invalid_argument("kirillov_check: need 0 < c*s < pi");
    // left side: square-root Jacobian times the character value
    double jhalf = std::sin(th) / th;
    double chi = std::sin((lambda + 1.0) * th) / std::sin(th);
    double lhs = jhalf * chi;
    // right side: Fourier transform of the orbit measure, a sphere of radius
    // rho_lambda with total mass d_lambda
    double rho = orbit_radius(lambda);
    double arg = 2.0 * kPi * rho * s;
    double rhs = (lambda + 1.0) * ((arg == 0.0) ? 1.0 : std::sin(arg) / arg);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// |tilde f(lambda) - d_lambda Fhat(rho_lambda)|.
inline double correspondence_check(const CentralFunction& f, int lambda) {
  cplx tf = central_ft(f, lambda);
  cplx fh = radial_hat_3d(lie_algebra_lift(f), orbit_radius(lambda));
  return std::abs(tf - (lambda + 1.0) * fh);
}

// central_flq_norm(f, p') / ||f||_p; tends to (B_p)^3 for shrinking supports.
inline double su2_local_central_ratio(const CentralFunction& f, double p, int lambda_max = 0,
                                      ConvergenceInfo* info = nullptr) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("su2_local_central_ratio: p in (1,2]");
  double q = p / (p - 1.0);
  if (lambda_max <= 0) {
    // tilde f decays on the scale c/width; cover ~4 widths past the peak
    lambda_max = std::min(2000, static_cast<int>(16.0 * kPi / f.delta) + 120);
  }
  double num = central_flq_norm(f, q, lambda_max, info);
  return num / lp_norm(f, p);
}

}  // namespace sharphy::su2
