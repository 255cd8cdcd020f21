#pragma once

// Transplantation machinery on T^d, d in {1,2}: Riemann-sum Fourier
// coefficients in the e^{+2 pi i} convention, the trapezoid cut-off
// phi = |K|^{-1} chi_{U+K} * chi_K with its closed-form transform, the
// operator T G = (phihat * G)|_{Z^d}, and local Hausdorff-Young ratios.

#include <Eigen/Dense>

#include "sharphy/euclidean.hpp"

namespace sharphy::torus {

struct TorusFunction {
  int dim = 1;
  int n = 8;  // even
  std::vector<cplx> samples;  // on x_j = -1/2 + (j+1)/N, row-major for d = 2

  double coord(int j) const { return -0.5 + (j + 1.0) / n; }
  cplx& at(int i) { return samples[static_cast<size_t>(i)]; }
  cplx at(int i) const { return samples[static_cast<size_t>(i)]; }
  cplx& at(int i, int j) { return samples[static_cast<size_t>(i) * n + j]; }
  cplx at(int i, int j) const { return samples[static_cast<size_t>(i) * n + j]; }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("TorusFunction: dim must be 1 or 2");
    if (n < 8 || n % 2) throw std::invalid_argument("TorusFunction: N must be even and >= 8");
    size_t expect = (dim == 1) ? static_cast<size_t>(n) : static_cast<size_t>(n) * n;
    if (samples.size() != expect) throw std::invalid_argument("TorusFunction: sample count mismatch");
  }
};

template <typename F>
TorusFunction make_torus_1d(int n, F&& f) {
  TorusFunction g;
  g.dim = 1;
  g.n = n;
  g.samples.resize(n);
  for (int i = 0; i < n; ++i) g.at(i) = cplx(f(g.coord(i)));
  g.validate();
  return g;
}

template <typename F>
TorusFunction make_torus_2d(int n, F&& f) {
  TorusFunction g;
  g.dim = 2;
  g.n = n;
  g.samples.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = cplx(f(g.coord(i), g.coord(j)));
  g.validate();
  return g;
}

// Gaussian bump of the given width periodized over 5 image periods.
inline TorusFunction periodized_gaussian(int dim, int n, double width) {
  auto g1 = [width](double x) {
    double s = 0.0;
    for (int img = -5; img <= 5; ++img) s += std::exp(-kPi * sharphy::detail::sq((x - img) / width));
    return s;
  };
  if (dim == 1) return make_torus_1d(n, g1);
  return make_torus_2d(n, [&](double x, double y) { return g1(x) * g1(y); });
}

inline double lp_norm(const TorusFunction& f, double p) {
  f.validate();
  if (p == kInf) {
    double m = 0.0;
    for (const cplx& v : f.samples) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double s = 0.0;
  for (const cplx& v : f.samples) s += std::pow(std::abs(v), p);
  return std::pow(s / f.samples.size(), 1.0 / p);
}

// fhat(mu) = int f(x) e^{2 pi i mu x} dx over |mu|_inf <= window, as a dense
// (2W+1)^d table with mu = 0 at the center.
inline Eigen::MatrixXcd fourier_coeffs(const TorusFunction& f, int window) {
  f.validate();
  const int n = f.n, w = window, m = 2 * w + 1;
  Eigen::MatrixXcd e(m, n);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) {
      double arg = 2.0 * kPi * (a - w) * f.coord(j);
      e(a, j) = cplx(std::cos(arg), std::sin(arg));
    }
  if (f.dim == 1) {
    Eigen::Map<const Eigen::VectorXcd> v(f.samples.data(), n);
    Eigen::VectorXcd c = e * v / double(n);
    return c;
  }
  Eigen::MatrixXcd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = f.at(i, j);
  return (e * s * e.transpose()) / double(n * n);
}

// ---------------------------------------------------------------------------
// cut-off function

struct CutoffSpec {
  double a = 0.1;  // U half-width per coordinate
  double b = 0.1;  // K half-width per coordinate
  void validate() const {
    if (!(a > 0.0 && b > 0.0 && a + 2.0 * b < 0.5))
      throw std::invalid_argument("CutoffSpec: need a, b > 0 and a + 2b < 1/2");
  }
};

struct PhiCutoff {
  CutoffSpec spec;
  int dim = 1;
  double phi_hat_l1 = 0.0;        // ||phihat||_{L^1(R^d)}
  double phi_hat_l1_axis = 0.0;   // 1-D factor

  // trapezoid profile per coordinate: 1 on |x| <= a, 0 beyond a + 2b
  double axis(double x) const {
    double t = (spec.a + 2.0 * spec.b - std::abs(x)) / (2.0 * spec.b);
    return std::clamp(t, 0.0, 1.0);
  }
  double operator()(double x) const { return axis(x); }
  double operator()(double x, double y) const { return axis(x) * axis(y); }

  // phihat per coordinate: (1/2b) sin(2 pi (a+b) xi) sin(2 pi b xi) / (pi xi)^2
  double hat_axis(double xi) const {
    double c1 = spec.a + spec.b, c2 = spec.b;
    if (std::abs(xi) < 1e-9) {
      // series around 0: 2 c1 * 2 c2 / (2 b) + O(xi^2)
      return 2.0 * c1 * 2.0 * c2 / (2.0 * spec.b) *
             (1.0 - sharphy::detail::sq(2.0 * kPi * xi) * (c1 * c1 + c2 * c2) / 6.0);
    }
    return std::sin(2.0 * kPi * c1 * xi) * std::sin(2.0 * kPi * c2 * xi) /
           (2.0 * spec.b * sharphy::detail::sq(kPi * xi));
  }
  double hat(double xi) const { return hat_axis(xi); }
  double hat(double xi, double eta) const { return hat_axis(xi) * hat_axis(eta); }
};

// phi = |K|^{-1} chi_{U+K} * chi_K with ||phihat||_1 from the closed form,
// truncated at |xi| = 1e4/(2 pi b) where the quadratic-decay tail is below
// 1/(b pi^2 T) ~ 6.4e-5 relative; the tail bound is added to the estimate.
inline PhiCutoff build_phi(const CutoffSpec& spec, int dim) {
  spec.validate();
  if (dim != 1 && dim != 2) throw std::invalid_argument("build_phi: dim must be 1 or 2");
  PhiCutoff phi;
  phi.spec = spec;
  phi.dim = dim;
  const double cut = 1e4 / (2.0 * kPi * spec.b);
  auto absal = [&](double xi) { return std::abs(phi.hat_axis(xi)); };
  double v = 2.0 * sharphy::detail::integrate(absal, 0.0, cut, 1e-9,
                                              1 << 12, 1 << 22, 1e-300);
  double tail = 1.0 / (spec.b * kPi * kPi * cut);
  phi.phi_hat_l1_axis = v + tail;
  phi.phi_hat_l1 = std::pow(phi.phi_hat_l1_axis, dim);
  return phi;
}

// ---------------------------------------------------------------------------
// transplantation

enum class EndpointNorm { kL2, kLInf };

// T G = (phihat * G)|_{Z^d} on integer points |m|_inf <= window, then checks
// ||TG||_{l^q} <= ||phihat||_1 ||G||_q + 1e-8.
inline bool transplant_endpoint_check(const PhiCutoff& phi, const euclidean::GridFunction& g,
                                      EndpointNorm q, int window = 0) {
  g.validate();
  if (g.dim != phi.dim) throw std::invalid_argument("transplant_endpoint_check: dim mismatch");
  if (window <= 0) window = static_cast<int>(std::floor(g.half_width)) + 3;
  const int n = g.n;
  const double hd = std::pow(g.spacing(), g.dim);
  std::vector<double> tg;
  if (g.dim == 1) {
    for (int m = -window; m <= window; ++m) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) acc += phi.hat(m - g.coord(j)) * g.at(j);
      tg.push_back(std::abs(hd * acc));
    }
  } else {
    for (int m1 = -window; m1 <= window; ++m1)
      for (int m2 = -window; m2 <= window; ++m2) {
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
          double hx = phi.hat_axis(m1 - g.coord(i));
          if (hx == 0.0) continue;
          for (int j = 0; j < n; ++j) acc += hx * phi.hat_axis(m2 - g.coord(j)) * g.at(i, j);
        }
        tg.push_back(std::abs(hd * acc));
      }
  }
  double lhs;
  double rhs_norm;
  if (q == EndpointNorm::kL2) {
    double s = 0.0;
    for (double v : tg) s += v * v;
    lhs = std::sqrt(s);
    rhs_norm = euclidean::lp_norm(g, 2.0);
  } else {
    lhs = 0.0;
    for (double v : tg) lhs = std::max(lhs, v);
    rhs_norm = euclidean::lp_norm(g, kInf);
  }
  return lhs <= phi.phi_hat_l1 * rhs_norm + 1e-8;
}

// ||fhat||_{l^{p'}} / ||f||_p over the coefficient window.
inline double torus_local_ratio(const TorusFunction& f, double p, int window,
                                ConvergenceInfo* info = nullptr) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("torus_local_ratio: p in (1,2]");
  double pp = p / (p - 1.0);
  Eigen::MatrixXcd coeffs = fourier_coeffs(f, window);
  double sum = 0.0, edge = 0.0, peak = 0.0;
  for (Eigen::Index i = 0; i < coeffs.rows(); ++i)
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
      double v = std::abs(coeffs(i, j));
      peak = std::max(peak, v);
      sum += std::pow(v, pp);
      bool boundary = (i == 0 || i == coeffs.rows() - 1) &&
                      (f.dim == 1 || j == 0 || j == coeffs.cols() - 1);
      if (f.dim == 2) boundary = (i == 0 || i == coeffs.rows() - 1 || j == 0 || j == coeffs.cols() - 1);
      if (boundary) edge = std::max(edge, v);
    }
  if (info) info->tail_warning = peak > 0.0 && edge > 1e-10 * peak;
  return std::pow(sum, 1.0 / pp) / lp_norm(f, p);
}

}  // namespace sharphy::torus
