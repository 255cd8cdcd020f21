#pragma once

// Desk-scale H_1 machinery: the Schroedinger representation in the Hermite
// basis, the scaling identity pi_lambda(F) = rho(Z_lambda F^lambda) for tensor
// functions F = f (x) phi, the Fourier-Lebesgue norm
// ( int ||pi_lambda(F)||_{S^q}^q |lambda| dlambda )^{1/q}, and ratio sweeps
// probing H_{p}(H_1) = B_p^3 along Gaussian tensor families.

#include "sharphy/weyl.hpp"

namespace sharphy::heisenberg {

using euclidean::GridFunction;
using euclidean::RadialProfile;

// phi(t) = e^{-pi mu t^2 - 2 pi i t lambda0}
struct TemporalGaussian {
  double mu = 1.0;
  double lambda0 = 1.0;
};

// F = f (x) phi with radial spatial factor; Gaussian spatial factors keep
// their shape parameter so spectra and norms stay in closed form.
struct TensorFunction {
  bool spatial_is_gaussian = true;
  double gaussian_t = 1.0;
  RadialProfile spatial;  // used when !spatial_is_gaussian
  TemporalGaussian temporal;
};

inline TensorFunction tensor_gaussian(double t, double mu, double lambda0) {
  if (!(t > 0.0) || !(mu > 0.0)) throw std::invalid_argument("tensor_gaussian: t, mu > 0");
  TensorFunction f;
  f.spatial_is_gaussian = true;
  f.gaussian_t = t;
  f.temporal = {mu, lambda0};
  return f;
}

inline TensorFunction tensor_radial(RadialProfile spatial, double mu, double lambda0) {
  TensorFunction f;
  f.spatial_is_gaussian = false;
  f.spatial = std::move(spatial);
  f.temporal = {mu, lambda0};
  return f;
}

// phihat(lambda) = mu^{-1/2} e^{-(pi/mu)(lambda - lambda0)^2}
inline double phi_hat(const TemporalGaussian& phi, double lambda) {
  return std::pow(phi.mu, -0.5) *
         std::exp(-(kPi / phi.mu) * sharphy::detail::sq(lambda - phi.lambda0));
}

inline RadialProfile spatial_profile(const TensorFunction& f) {
  if (f.spatial_is_gaussian) return euclidean::radial_gaussian(f.gaussian_t);
  return f.spatial;
}

// F^lambda = phihat(lambda) f for tensor inputs.
inline RadialProfile partial_ft(const TensorFunction& f, double lambda) {
  double ph = phi_hat(f.temporal, lambda);
  RadialProfile base = spatial_profile(f);
  return {[ph, base](double r) { return ph * base.eval(r); }, base.support_radius};
}

// Z_lambda f(z) = |lambda|^{-1} f(|lambda|^{-1/2} z) (n = 1; the lambda < 0
// branch conjugates the argument, which is invisible for radial profiles).
inline RadialProfile z_scale(const RadialProfile& f, double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("z_scale: lambda must be nonzero");
  double al = std::abs(lambda);
  double root = std::sqrt(al);
  return {[f, al, root](double r) { return f.eval(r / root) / al; },
          f.support_radius * root};
}

// Gaussian shape maps to shape t/|lambda| with prefactor 1/|lambda|.
struct ScaledGaussian {
  double prefactor = 1.0;
  double shape = 1.0;
};
inline ScaledGaussian z_scale_gaussian(double t, double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("z_scale_gaussian: lambda must be nonzero");
  return {1.0 / std::abs(lambda), t / std::abs(lambda)};
}

// Hermite-basis matrix of pi_lambda(z, t) = pi(A_lambda(z, t)).
inline Eigen::MatrixXcd schrodinger_matrix(double lambda, cplx z, double t, int m) {
  if (lambda == 0.0) throw std::invalid_argument("schrodinger_matrix: lambda must be nonzero");
  if (m < 1 || m > 64) throw std::invalid_argument("schrodinger_matrix: need 1 <= M <= 64");
  const double root = std::sqrt(std::abs(lambda));
  const cplx w = (lambda > 0.0) ? root * z : root * std::conj(z);
  const double u = w.real(), v = w.imag();
  const double phase_arg = 2.0 * kPi * lambda * t + kPi * u * v;
  const cplx phase(std::cos(phase_arg), std::sin(phase_arg));

  const double span = 7.0 + std::abs(u);
  const int n = 1024;
  const double h = 2.0 * span / n;
  Eigen::MatrixXcd left(m, n);   // h_j(x) e^{2 pi i v x}
  Eigen::MatrixXd right(n, m);   // h_k(x + u)
  for (int i = 0; i < n; ++i) {
    double x = -span + (i + 0.5) * h;
    auto hj = specfun::hermite_values(m - 1, x);
    auto hk = specfun::hermite_values(m - 1, x + u);
    double arg = 2.0 * kPi * v * x;
    cplx e(std::cos(arg), std::sin(arg));
    for (int j = 0; j < m; ++j) {
      left(j, i) = hj[j] * e;
      right(i, j) = hk[j];
    }
  }
  return phase * h * (left * right);
}

namespace detail {

// pi_lambda(F) assembled from its own integral kernel
//   K(x,y) = |l|^{-1/2} int f((y-x)/sqrt|l| + iv) e^{sgn(l) i pi sqrt|l| v (x+y)} dv,
// times phihat(lambda); an independent code path from weyl_matrix.
inline Eigen::MatrixXcd rep_matrix_direct(const TensorFunction& f, double lambda, int m) {
  const RadialProfile spatial = spatial_profile(f);
  const double al = std::abs(lambda);
  const double root = std::sqrt(al);
  const double sgn = (lambda > 0.0) ? 1.0 : -1.0;
  const double sr = spatial.support_radius;

  const double span = 7.0;  // covers Hermite mass for m <= 24; the kernel dies off with f
  const int nxy = 384;
  const double hxy = 2.0 * span / nxy;
  const double vmax = sr;
  const int nv = 384;
  const double hv = 2.0 * vmax / nv;

  std::vector<double> xs(nxy);
  for (int i = 0; i < nxy; ++i) xs[i] = -span + (i + 0.5) * hxy;

  Eigen::MatrixXcd kernel(nxy, nxy);
  for (int a = 0; a < nxy; ++a)
    for (int b = 0; b < nxy; ++b) {
      double u0 = (xs[b] - xs[a]) / root;
      if (std::abs(u0) > sr) {
        kernel(a, b) = 0.0;
        continue;
      }
      cplx acc = 0.0;
      for (int c = 0; c < nv; ++c) {
        double v = -vmax + (c + 0.5) * hv;
        cplx fv = spatial.eval(std::hypot(u0, v));
        if (fv == 0.0) continue;
        double arg = sgn * kPi * root * v * (xs[a] + xs[b]);
        acc += fv * cplx(std::cos(arg), std::sin(arg));
      }
      kernel(a, b) = hv * acc / root;
    }

  Eigen::MatrixXd hmat(nxy, m);
  for (int i = 0; i < nxy; ++i) {
    auto vals = specfun::hermite_values(m - 1, xs[i]);
    for (int k = 0; k < m; ++k) hmat(i, k) = vals[k];
  }
  return phi_hat(f.temporal, lambda) * (hxy * hxy) * (hmat.transpose() * kernel * hmat);
}

}  // namespace detail

// Relative matrix difference between pi_lambda(F) assembled directly and the
// Weyl matrix of Z_lambda F^lambda built on its own grid.
inline double rep_weyl_consistency(const TensorFunction& f, double lambda, int m = 12) {
  if (!(std::abs(lambda) >= 0.25 && std::abs(lambda) <= 4.0))
    throw std::invalid_argument("rep_weyl_consistency: need |lambda| in [1/4, 4]");
  Eigen::MatrixXcd direct = detail::rep_matrix_direct(f, lambda, m);

  RadialProfile scaled = z_scale(partial_ft(f, lambda), lambda);
  double rr = std::min(6.5, scaled.support_radius + 0.5);
  GridFunction g = euclidean::make_grid_2d(rr, 128, [&](cplx z) { return scaled.eval(std::abs(z)); });
  weyl::WeylMatrix w = weyl::weyl_matrix(g, m);

  double denom = w.entries.norm();
  if (denom == 0.0) return direct.norm();
  double res = (direct - w.entries).norm() / denom;
  if (res > 1e-2) throw GridResolutionError("rep_weyl_consistency: residual above 1e-2");
  return res;
}

namespace detail {

// ||rho(Z_{|l|} F^l)||_{S^q}^q |l| at one lambda; closed form for Gaussian
// spatial factors, Laguerre spectrum otherwise.
inline double flq_integrand(const TensorFunction& f, double q, double lambda, int kmax) {
  double al = std::abs(lambda);
  double ph = phi_hat(f.temporal, lambda);
  if (f.spatial_is_gaussian) {
    double t = f.gaussian_t;
    if (al < 1e-9 * t) {
      // lambda -> 0 limit: |phihat|^q t^{1-q} / q
      return std::pow(ph, q) * std::pow(t, 1.0 - q) / q;
    }
    double s = t / al;
    double logr = std::log(std::abs(s - 0.5)) - std::log(s + 0.5);
    double one_minus_rq = -std::expm1(q * logr);
    double sum = 1.0 / (std::pow(s + 0.5, q) * one_minus_rq);
    return std::pow(ph / al, q) * sum * al;
  }
  if (al < 1e-8) return 0.0;  // radial-profile branch: contribution provably below
                              // window-fraction 1e-8 of the peak for |l0| >= 1/4
  RadialProfile scaled = z_scale(spatial_profile(f), al);
  weyl::LaguerreSpectrum s = weyl::weyl_diag_radial(scaled, kmax);
  double sum = 0.0;
  for (const cplx& v : s.values) sum += std::pow(std::abs(v), q);
  return std::pow(ph, q) * sum * al;
}

}  // namespace detail

// ( int_{R \ 0} ||pi_lambda(F)||_{S^q}^q |lambda| dlambda )^{1/q} for tensor F,
// with the lambda-window doubled until the result is stable to 1e-8.
inline double flq_norm_tensor(const TensorFunction& f, double q, ConvergenceInfo* info = nullptr) {
  if (!(q >= 2.0)) throw std::invalid_argument("flq_norm_tensor: q must be >= 2");
  const double mu = f.temporal.mu, l0 = f.temporal.lambda0;
  const int kmax = f.spatial_is_gaussian ? 0 : 96;
  auto integrand = [&](double lam) { return detail::flq_integrand(f, q, lam, kmax); };
  auto window_value = [&](double w) {
    double a = l0 - w, b = l0 + w;
    double tol = f.spatial_is_gaussian ? 1e-10 : 1e-7;
    int start = f.spatial_is_gaussian ? 64 : 16;
    const double rel = 1e-300;  // converge relative to the integral itself
    if (a < 0.0 && b > 0.0)
      return sharphy::detail::integrate(integrand, a, 0.0, tol, start, 1 << 21, rel) +
             sharphy::detail::integrate(integrand, 0.0, b, tol, start, 1 << 21, rel);
    return sharphy::detail::integrate(integrand, a, b, tol, start, 1 << 21, rel);
  };
  double w = std::sqrt(38.0 * mu / (kPi * q));
  double prev = window_value(w);
  for (int i = 0; i < 6; ++i) {
    double cur = window_value(2.0 * w);
    double change = std::abs(cur - prev);
    if (info) {
      info->last_change = change;
      ++info->refinements;
    }
    if (change <= 1e-8 * std::max(cur, 1e-300)) return std::pow(cur, 1.0 / q);
    prev = cur;
    w *= 2.0;
  }
  throw QuadratureError("flq_norm_tensor: lambda window did not stabilize");
}

inline double spatial_lp_norm(const TensorFunction& f, double p) {
  if (f.spatial_is_gaussian) return std::pow(p * f.gaussian_t, -1.0 / p);
  const RadialProfile& f0 = f.spatial;
  double umax = kPi * sharphy::detail::sq(f0.support_radius);
  auto integrand = [&](double u) {
    return std::pow(std::abs(f0.eval(std::sqrt(u / kPi))), p);
  };
  return std::pow(sharphy::detail::integrate(integrand, 0.0, umax, 1e-11, 64, 1 << 21, 1e-300),
                  1.0 / p);
}

// flq_norm_tensor(F, p') / (||f||_p ||phi||_p).
inline double heis_ratio_tensor(const TensorFunction& f, double p) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("heis_ratio_tensor: p in (1,2]");
  double q = p / (p - 1.0);
  double num = flq_norm_tensor(f, q);
  double fp = spatial_lp_norm(f, p);
  double php = std::pow(p * f.temporal.mu, -1.0 / (2.0 * p));
  return num / (fp * php);
}

// ---------------------------------------------------------------------------
// supremum search over the Gaussian family (t, mu, lambda0)

struct SweepPoint {
  double t = 0.0, mu = 0.0, lambda0 = 0.0, ratio = 0.0;
};

struct SweepResult {
  SweepPoint best;
  std::vector<SweepPoint> trace;
};

// Coarse log-grid scan followed by coordinate-wise golden-section refinement;
// every evaluation lands in the trace for reproducibility.
inline SweepResult heis_sweep_gaussian(double p, double t_lo, double t_hi, double mu_lo,
                                       double mu_hi, double l_lo, double l_hi,
                                       int grid_pts = 5, int rounds = 2) {
  SweepResult out;
  auto eval = [&](double t, double mu, double l0) {
    double r = heis_ratio_tensor(tensor_gaussian(t, mu, l0), p);
    out.trace.push_back({t, mu, l0, r});
    return r;
  };
  auto logspace = [&](double lo, double hi, int i) {
    return lo * std::pow(hi / lo, grid_pts == 1 ? 0.0 : double(i) / (grid_pts - 1));
  };
  SweepPoint best;
  for (int a = 0; a < grid_pts; ++a)
    for (int b = 0; b < grid_pts; ++b)
      for (int c = 0; c < grid_pts; ++c) {
        double t = logspace(t_lo, t_hi, a);
        double mu = logspace(mu_lo, mu_hi, b);
        double l0 = logspace(l_lo, l_hi, c);
        double r = eval(t, mu, l0);
        if (r > best.ratio) best = {t, mu, l0, r};
      }

  const double gr = 0.6180339887498949;
  auto golden_axis = [&](int axis, double lo, double hi) {
    // maximize along one axis in log space, other two fixed at the incumbent
    double a = std::log(lo), b = std::log(hi);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    auto at = [&](double lx) {
      double v = std::exp(lx);
      double t = axis == 0 ? v : best.t;
      double mu = axis == 1 ? v : best.mu;
      double l0 = axis == 2 ? v : best.lambda0;
      return eval(t, mu, l0);
    };
    double f1 = at(x1), f2 = at(x2);
    for (int it = 0; it < 24; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = at(x1);
      }
    }
    double lx = (f1 > f2) ? x1 : x2;
    double v = std::exp(lx);
    double t = axis == 0 ? v : best.t;
    double mu = axis == 1 ? v : best.mu;
    double l0 = axis == 2 ? v : best.lambda0;
    double r = std::max(f1, f2);
    if (r > best.ratio) best = {t, mu, l0, r};
  };
  for (int round = 0; round < rounds; ++round) {
    golden_axis(0, t_lo, t_hi);
    golden_axis(1, mu_lo, mu_hi);
    golden_axis(2, l_lo, l_hi);
  }
  out.best = best;
  return out;
}

}  // namespace sharphy::heisenberg
