#pragma once

// The Weyl transform rho(f) on C: Hermite-basis matrices assembled from the
// integral kernel K_f(x,y) = int f(y-x+iv) e^{i pi v(x+y)} dv, the radial
// Laguerre diagonalization tilde f(k) = int f chi_k, twisted convolution,
// Schatten norms, the weighted polyradial inequality, the Gaussian ratio
// curve, the chi_k counterexample, and the L^1->L^inf operator-norm
// characterization of Schatten norms of twisted convolutors.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sharphy/euclidean.hpp"

namespace sharphy::weyl {

using euclidean::GridFunction;
using euclidean::RadialProfile;

struct WeylMatrix {
  Eigen::MatrixXcd entries;  // entries(j,k) ~ <rho(f) h_k, h_j>
  int truncation() const { return static_cast<int>(entries.rows()); }
};

struct LaguerreSpectrum {
  std::vector<cplx> values;  // values[k] = tilde f(k)
};

// ---------------------------------------------------------------------------
// kernel and matrix assembly

// K_f(x,y) by 1-D quadrature along the grid's v-axis, interpolating f in the
// first argument (8-point Lagrange).
inline cplx weyl_kernel(const GridFunction& f, double x, double y) {
  f.validate();
  if (f.dim != 2) throw std::invalid_argument("weyl_kernel: f must be 2-D");
  const double r = f.half_width;
  if (std::abs(x) > r || std::abs(y) > r || std::abs(y - x) > r - 4.0 * f.spacing())
    throw std::invalid_argument("weyl_kernel: (x,y) outside the grid");
  const int n = f.n;
  const double h = f.spacing();
  cplx acc = 0.0;
  for (int c = 0; c < n; ++c) {
    double v = f.coord(c);
    double arg = kPi * v * (x + y);
    acc += euclidean::sample_interp_x(f, y - x, c) * cplx(std::cos(arg), std::sin(arg));
  }
  return h * acc;
}

namespace detail {

// Hermite sample matrix H(i, k) = h_k(x_i) on the grid coordinates.
inline Eigen::MatrixXd hermite_sample_matrix(const GridFunction& f, int m) {
  Eigen::MatrixXd hmat(f.n, m);
  for (int i = 0; i < f.n; ++i) {
    auto vals = specfun::hermite_values(m - 1, f.coord(i));
    for (int k = 0; k < m; ++k) hmat(i, k) = vals[k];
  }
  return hmat;
}

// Kernel matrix K(a,b) on grid points, for phase e^{i pi v (x_a + y_b)}
// (weyl == true) or e^{2 pi i v y_b} (the ordered-product operator nu).
inline Eigen::MatrixXcd kernel_matrix(const GridFunction& f, bool weyl) {
  const int n = f.n;
  const double h = f.spacing();
  Eigen::MatrixXcd k(n, n);
  // phase table: weyl -> e^{i pi v_c s}, s = x_a + y_b indexed by a+b;
  //              nu   -> e^{2 pi i v_c y_b} indexed by b directly
  if (weyl) {
    Eigen::MatrixXcd ph(2 * n - 1, n);
    for (int m = 0; m <= 2 * n - 2; ++m) {
      double s = (m - n) * h;
      for (int c = 0; c < n; ++c) {
        double arg = kPi * f.coord(c) * s;
        ph(m, c) = cplx(std::cos(arg), std::sin(arg));
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int u = b - a + n / 2;
        if (u < 0 || u >= n) {
          k(a, b) = 0.0;
          continue;
        }
        cplx acc = 0.0;
        for (int c = 0; c < n; ++c) acc += f.at(u, c) * ph(a + b, c);
        k(a, b) = h * acc;
      }
  } else {
    Eigen::MatrixXcd ph(n, n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double arg = 2.0 * kPi * f.coord(c) * f.coord(b);
        ph(b, c) = cplx(std::cos(arg), std::sin(arg));
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int u = b - a + n / 2;
        if (u < 0 || u >= n) {
          k(a, b) = 0.0;
          continue;
        }
        cplx acc = 0.0;
        for (int c = 0; c < n; ++c) acc += f.at(u, c) * ph(b, c);
        k(a, b) = h * acc;
      }
  }
  return k;
}

inline WeylMatrix sandwich(const GridFunction& f, const Eigen::MatrixXcd& kernel, int m) {
  Eigen::MatrixXd hmat = hermite_sample_matrix(f, m);
  double h = f.spacing();
  WeylMatrix w;
  w.entries = (h * h) * (hmat.transpose() * (kernel * hmat));
  return w;
}

}  // namespace detail

// entries(j,k) = iint h_j(x) K_f(x,y) h_k(y) dy dx by grid quadrature.
inline WeylMatrix weyl_matrix(const GridFunction& f, int m, ConvergenceInfo* info = nullptr) {
  f.validate();
  if (f.dim != 2) throw std::invalid_argument("weyl_matrix: f must be 2-D");
  if (m < 1 || m > 128) throw std::invalid_argument("weyl_matrix: need 1 <= M <= 128");
  WeylMatrix w = detail::sandwich(f, detail::kernel_matrix(f, /*weyl=*/true), m);
  if (info) {
    double total = w.entries.norm();
    double edge = std::max(w.entries.row(m - 1).norm(), w.entries.col(m - 1).norm());
    info->truncation_warning = total > 0.0 && edge > 1e-6 * total;
  }
  return w;
}

// ---------------------------------------------------------------------------
// radial diagonalization

// tilde f(k) = int_0^inf f0(sqrt(u/pi)) e^{-u/2} L_k(u) du, k = 0..K, by
// Gauss-Laguerre against weight e^{-u} with node doubling to 1e-10.
inline LaguerreSpectrum weyl_diag_radial(const RadialProfile& f0, int kmax,
                                         ConvergenceInfo* info = nullptr) {
  if (kmax < 0 || kmax > 200) throw std::invalid_argument("weyl_diag_radial: need 0 <= K <= 200");
  const double umax = kPi * sharphy::detail::sq(f0.support_radius);
  auto pass = [&](int n) {
    const auto& rule = quadrature::gauss_laguerre(n);
    std::vector<cplx> vals(kmax + 1, 0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double u = rule.nodes[i];
      if (u > umax) break;
      cplx fv = f0.eval(std::sqrt(u / kPi));
      if (fv == 0.0) continue;
      fv *= rule.weights_unweighted[i];
      auto lag = specfun::laguerre_scaled_values(kmax, u);
      for (int k = 0; k <= kmax; ++k) vals[k] += fv * lag[k];
    }
    return vals;
  };
  std::vector<cplx> prev = pass(128);
  for (int n = 256; n <= 8192; n *= 2) {
    std::vector<cplx> cur = pass(n);
    double change = 0.0, scale = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      change = std::max(change, std::abs(cur[k] - prev[k]));
      scale = std::max(scale, std::abs(cur[k]));
    }
    if (info) {
      info->last_change = change;
      ++info->refinements;
    }
    if (change <= 1e-10 * scale) return LaguerreSpectrum{std::move(cur)};
    prev = std::move(cur);
  }
  throw QuadratureError("weyl_diag_radial: node doubling did not settle to 1e-10");
}

// (t - 1/2)^k / (t + 1/2)^{k+1}; the k = 0 value at t = 1/2 is 1 by continuity.
inline double gaussian_weyl_spectrum(double t, int k) {
  if (!(t > 0.0)) throw std::invalid_argument("gaussian_weyl_spectrum: t must be positive");
  if (k < 0) throw std::invalid_argument("gaussian_weyl_spectrum: k must be >= 0");
  if (t == 0.5) return k == 0 ? 1.0 : 0.0;
  return std::pow(t - 0.5, k) / std::pow(t + 0.5, k + 1);
}

// ---------------------------------------------------------------------------
// Schatten norms

// (sum sigma_i^q)^{1/q} over singular values of the truncated matrix.
inline double schatten_norm(const WeylMatrix& w, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("schatten_norm: q must be >= 1");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(w.entries);
  const auto& sv = svd.singularValues();
  if (q == kInf) return sv.size() ? sv(0) : 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) s += std::pow(sv(i), q);
  return std::pow(s, 1.0 / q);
}

// l^q norm of a Laguerre spectrum, with the truncation-tail warning from the
// spec: the last term extrapolated over K more entries must stay below 1e-10
// of the partial sum.
inline double schatten_norm_diag(const LaguerreSpectrum& s, double q,
                                 ConvergenceInfo* info = nullptr) {
  if (!(q >= 1.0)) throw std::invalid_argument("schatten_norm_diag: q must be >= 1");
  if (s.values.empty()) return 0.0;
  if (q == kInf) {
    double m = 0.0;
    for (const cplx& v : s.values) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (const cplx& v : s.values) sum += std::pow(std::abs(v), q);
  if (info) {
    double last = std::pow(std::abs(s.values.back()), q);
    info->truncation_warning = sum > 0.0 && last * s.values.size() > 1e-10 * sum;
  }
  return std::pow(sum, 1.0 / q);
}

// ---------------------------------------------------------------------------
// twisted convolution

// (f x_lambda g)(z) = int f(z-w) g(w) e^{i pi lambda^2 Im(conj z . w)} dw by
// direct double-grid quadrature; lambda = 1 is the twisted convolution.
inline GridFunction twisted_convolve_scaled(const GridFunction& f, const GridFunction& g,
                                            double lambda) {
  f.validate();
  g.validate();
  if (f.dim != 2 || g.dim != 2) throw std::invalid_argument("twisted_convolve: need 2-D grids");
  if (f.n != g.n || f.half_width != g.half_width)
    throw std::invalid_argument("twisted_convolve: grids must match");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("twisted_convolve: lambda must lie in [0,1]");
  const int n = f.n;
  const double h = f.spacing();
  const double hd = h * h;
  // Im(conj z . w) = x_z y_w - y_z x_w = h^2 * integer; one table serves all pairs.
  const long mmax = 2l * (n / 2) * (n / 2);
  std::vector<cplx> phase(2 * mmax + 1);
  for (long m = -mmax; m <= mmax; ++m) {
    double arg = kPi * lambda * lambda * static_cast<double>(m) * hd;
    phase[static_cast<size_t>(m + mmax)] = cplx(std::cos(arg), std::sin(arg));
  }
  GridFunction out = f;
  for (int a = 0; a < n; ++a) {
    const long ia = a - n / 2;
    for (int b = 0; b < n; ++b) {
      const long ib = b - n / 2;
      cplx acc = 0.0;
      for (int c = 0; c < n; ++c) {
        const int ka = a - c + n / 2;
        if (ka < 0 || ka >= n) continue;
        const long ic = c - n / 2;
        const cplx* frow = &f.samples[static_cast<size_t>(ka) * n];
        const cplx* grow = &g.samples[static_cast<size_t>(c) * n];
        for (int d = 0; d < n; ++d) {
          const int kb = b - d + n / 2;
          if (kb < 0 || kb >= n) continue;
          const long m = ia * (d - n / 2) - ib * ic;
          acc += frow[kb] * grow[d] * phase[static_cast<size_t>(m + mmax)];
        }
      }
      out.at(a, b) = hd * acc;
    }
  }
  euclidean::detail::check_result_support(out, "twisted_convolve");
  return out;
}

inline GridFunction twisted_convolve(const GridFunction& f, const GridFunction& g) {
  return twisted_convolve_scaled(f, g, 1.0);
}

// ---------------------------------------------------------------------------
// identity checks

// Assembles nu(f) from the ordered-product kernel int f(y-x+iv) e^{2 pi i v y} dv
// and compares it with the Weyl matrix of e^{i pi u v} f; returns the relative
// Frobenius difference.
inline double nu_rho_check(const GridFunction& f, int m = 32) {
  f.validate();
  if (f.dim != 2) throw std::invalid_argument("nu_rho_check: f must be 2-D");
  WeylMatrix nu = detail::sandwich(f, detail::kernel_matrix(f, /*weyl=*/false), m);
  GridFunction fm = f;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      double arg = kPi * f.coord(i) * f.coord(j);
      fm.at(i, j) = f.at(i, j) * cplx(std::cos(arg), std::sin(arg));
    }
  WeylMatrix rho = weyl_matrix(fm, m);
  double denom = rho.entries.norm();
  if (denom == 0.0) return nu.entries.norm();
  double res = (nu.entries - rho.entries).norm() / denom;
  if (res > 1e-3) throw GridResolutionError("nu_rho_check: residual above 1e-3");
  return res;
}

// ---------------------------------------------------------------------------
// inequalities and curves

namespace detail {

// ||f0 e^{(pi/2) r^2}||_p in the u = pi r^2 variable.
inline double weighted_lp_norm_radial(const RadialProfile& f0, double p) {
  double umax = kPi * sharphy::detail::sq(f0.support_radius);
  auto integrand = [&](double u) {
    return std::pow(std::abs(f0.eval(std::sqrt(u / kPi))), p) * std::exp(p * u / 2.0);
  };
  return std::pow(sharphy::detail::integrate(integrand, 0.0, umax, 1e-11, 64, 1 << 21, 1e-300),
                  1.0 / p);
}

// Schatten-q norm of the spectrum under the K-doubling policy (64 -> 256).
inline double spectrum_schatten(const RadialProfile& f0, double q) {
  double prev = -1.0;
  for (int kmax = 64; kmax <= 256; kmax *= 2) {
    LaguerreSpectrum s = weyl_diag_radial(f0, kmax);
    double cur = schatten_norm_diag(s, q);
    if (prev >= 0.0 && std::abs(cur - prev) <= 1e-6 * std::max(1e-300, cur)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace detail

// ||rho(f)||_{S^{p'}} / ((B_p)^{2n} ||f e^{(pi/2)|.|^2}||_p) for radial f
// (n = 1) -- the weighted inequality asserts this never exceeds 1.
inline double weighted_polyradial_ratio(const RadialProfile& f0, double p) {
  exponents::Exponent ex(p);
  double num = ex.conjugate_is_infinite()
                   ? schatten_norm_diag(weyl_diag_radial(f0, 128), kInf)
                   : detail::spectrum_schatten(f0, ex.conjugate());
  double den = sharphy::detail::sq(exponents::babenko_beckner(p)) *
               detail::weighted_lp_norm_radial(f0, p);
  return num / den;
}

// Polyradial n = 2 via tensor products of 1-D spectra.
inline double weighted_polyradial_ratio_tensor(const RadialProfile& f1, const RadialProfile& f2,
                                               double p) {
  exponents::Exponent ex(p);
  double num;
  if (ex.conjugate_is_infinite()) {
    num = schatten_norm_diag(weyl_diag_radial(f1, 128), kInf) *
          schatten_norm_diag(weyl_diag_radial(f2, 128), kInf);
  } else {
    num = detail::spectrum_schatten(f1, ex.conjugate()) *
          detail::spectrum_schatten(f2, ex.conjugate());
  }
  double den = std::pow(exponents::babenko_beckner(p), 4) *
               detail::weighted_lp_norm_radial(f1, p) * detail::weighted_lp_norm_radial(f2, p);
  return num / den;
}

// R(t) = ||rho(e^{-pi t |z|^2})||_{S^{p'}} / ||e^{-pi t |z|^2}||_p using the
// closed-form geometric spectrum; R(t) increases to (B_p)^2 as t -> inf and
// never attains it.
inline double gaussian_ratio_point(double p, double t) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("gaussian_ratio_point: p in (1,2)");
  if (!(t > 0.5)) throw std::invalid_argument("gaussian_ratio_point: t must exceed 1/2");
  double q = p / (p - 1.0);
  // l^q of (t-1/2)^k/(t+1/2)^{k+1}: (t+1/2)^{-1} (1 - r^q)^{-1/q}, r = (t-1/2)/(t+1/2)
  double logr = std::log(t - 0.5) - std::log(t + 0.5);
  double one_minus_rq = -std::expm1(q * logr);
  double num = std::pow(one_minus_rq, -1.0 / q) / (t + 0.5);
  double den = std::pow(p * t, -1.0 / p);
  return num / den;
}

inline RatioCurve gaussian_ratio_curve(double p, const std::vector<double>& t_list) {
  RatioCurve curve;
  curve.label = "weyl-gaussian-ratio";
  curve.limit_constant = sharphy::detail::sq(exponents::babenko_beckner(p));
  curve.param = t_list;
  curve.ratio.reserve(t_list.size());
  for (double t : t_list) curve.ratio.push_back(gaussian_ratio_point(p, t));
  return curve;
}

// r_k = ||chi_k x chi_k||_2 / ||chi_k * chi_k||_2.  The numerator is 1 by the
// projection identity chi_k x chi_k = chi_k; the denominator ||chihat_k||_4^2
// is computed by radial quadrature of |chihat_k|^4 through radial_hat.
inline double counterexample_ratio(int k) {
  if (k < 0 || k > 60) throw std::invalid_argument("counterexample_ratio: need 0 <= k <= 60");
  RadialProfile prof = euclidean::radial_chi(k);
  double zmax = prof.support_radius / 2.0 + 0.5;
  auto integrand = [&](double zeta) {
    double v = std::abs(euclidean::radial_hat(prof, zeta));
    return v * v * v * v * zeta;
  };
  double l4_4 = 2.0 * kPi *
                sharphy::detail::integrate(integrand, 0.0, zmax, 1e-7, 64 + 4 * k, 1 << 14);
  return 1.0 / std::sqrt(l4_4);
}

// ---------------------------------------------------------------------------
// operator-norm characterization

// Materializes the twisted convolutor T_f on an N x N grid, forms |T_f|^q by
// Hermitian eigendecomposition of T*T, reads off ||.||_{L^1 -> L^inf} as the
// largest kernel entry, and returns the relative mismatch against
// sum_k |tilde f(k)|^q.
inline double twisted_operator_schatten_check(const RadialProfile& f0, double q, int n = 32,
                                              double half_width = 3.5) {
  if (!(q >= 2.0)) throw std::invalid_argument("twisted_operator_schatten_check: q >= 2");
  if (n > 48) throw std::invalid_argument("twisted_operator_schatten_check: N <= 48");
  const double h = 2.0 * half_width / n;
  const int npts = n * n;
  std::vector<cplx> zs(npts);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      zs[static_cast<size_t>(i) * n + j] = cplx((i - n / 2) * h, (j - n / 2) * h);

  Eigen::MatrixXcd t(npts, npts);
  for (int a = 0; a < npts; ++a)
    for (int b = 0; b < npts; ++b) {
      cplx d = zs[a] - zs[b];
      double im = zs[a].real() * zs[b].imag() - zs[a].imag() * zs[b].real();
      t(a, b) = (h * h) * f0.eval(std::abs(d)) * cplx(std::cos(kPi * im), std::sin(kPi * im));
    }

  // |T|^q = V |lambda|^{q/2}... via T*T = V D V^*, |T|^q = V D^{q/2} V^*
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t.adjoint() * t);
  Eigen::VectorXd dq = eig.eigenvalues().cwiseMax(0.0).array().pow(q / 2.0);
  Eigen::MatrixXcd bq =
      eig.eigenvectors() * dq.asDiagonal() * eig.eigenvectors().adjoint();
  double lhs = bq.cwiseAbs().maxCoeff() / (h * h);

  double rhs = 0.0;
  LaguerreSpectrum s = weyl_diag_radial(f0, 128);
  for (const cplx& v : s.values) rhs += std::pow(std::abs(v), q);
  if (rhs == 0.0 && lhs == 0.0) return 0.0;
  double res = std::abs(lhs - rhs) / std::max(rhs, 1e-300);
  if (res > 5e-2)
    throw GridResolutionError("twisted_operator_schatten_check: residual above 5e-2");
  return res;
}

}  // namespace sharphy::weyl
