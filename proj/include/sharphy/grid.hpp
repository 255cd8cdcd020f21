#pragma once

// Uniformly sampled complex functions on a centered box in dimension 1 or 2,
// with the e^{+2 pi i} Fourier transform realized by phase-corrected DFT and
// Riemann-sum convolution.  Grid points are x_j = (j - N/2) h, h = 2R/N.

#include <Eigen/Dense>

#include "sharphy/common.hpp"

namespace sharphy::euclidean {

struct GridFunction {
  int dim = 1;
  double half_width = 1.0;  // R
  int n = 8;                // N, even, points per axis
  std::vector<cplx> samples;

  double spacing() const { return 2.0 * half_width / n; }
  double coord(int i) const { return (i - n / 2) * spacing(); }

  cplx& at(int i) { return samples[static_cast<size_t>(i)]; }
  cplx at(int i) const { return samples[static_cast<size_t>(i)]; }
  cplx& at(int ix, int iy) { return samples[static_cast<size_t>(ix) * n + iy]; }
  cplx at(int ix, int iy) const { return samples[static_cast<size_t>(ix) * n + iy]; }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("GridFunction: dim must be 1 or 2");
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("GridFunction: N must be even and >= 8");
    if (!(half_width > 0.0)) throw std::invalid_argument("GridFunction: R must be positive");
    size_t expect = (dim == 1) ? static_cast<size_t>(n) : static_cast<size_t>(n) * n;
    if (samples.size() != expect) throw std::invalid_argument("GridFunction: sample count mismatch");
  }
};

template <typename F>
GridFunction make_grid_1d(double half_width, int n, F&& f) {
  GridFunction g;
  g.dim = 1;
  g.half_width = half_width;
  g.n = n;
  g.samples.resize(n);
  for (int i = 0; i < n; ++i) g.at(i) = cplx(f(g.coord(i)));
  g.validate();
  return g;
}

template <typename F>
GridFunction make_grid_2d(double half_width, int n, F&& f) {
  GridFunction g;
  g.dim = 2;
  g.half_width = half_width;
  g.n = n;
  g.samples.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = cplx(f(cplx(g.coord(i), g.coord(j))));
  g.validate();
  return g;
}

inline double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const cplx& s : f.samples) m = std::max(m, std::abs(s));
  return m;
}

// Largest |coordinate| (per axis) carrying samples above 1e-12 of the peak.
inline double support_radius(const GridFunction& f) {
  double thresh = 1e-12 * max_abs(f);
  double r = 0.0;
  if (f.dim == 1) {
    for (int i = 0; i < f.n; ++i)
      if (std::abs(f.at(i)) > thresh) r = std::max(r, std::abs(f.coord(i)));
  } else {
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < f.n; ++j)
        if (std::abs(f.at(i, j)) > thresh)
          r = std::max(r, std::max(std::abs(f.coord(i)), std::abs(f.coord(j))));
  }
  return r;
}

// (h^dim sum |f|^p)^{1/p}; max over samples for p = inf.
inline double lp_norm(const GridFunction& f, double p) {
  f.validate();
  if (p == kInf) return max_abs(f);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double hx = std::pow(f.spacing(), f.dim);
  double s = 0.0;
  for (const cplx& v : f.samples) s += std::pow(std::abs(v), p);
  return std::pow(hx * s, 1.0 / p);
}

namespace detail {

inline Eigen::MatrixXcd dft_phase_matrix(const GridFunction& f) {
  const int n = f.n;
  Eigen::MatrixXcd e(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j) {
      double arg = 2.0 * kPi * double(m - n / 2) * double(j - n / 2) / n;
      e(m, j) = cplx(std::cos(arg), std::sin(arg));
    }
  return e;
}

inline Eigen::MatrixXcd as_matrix(const GridFunction& f) {
  const int n = f.n;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f.at(i, j);
  return m;
}

inline void require_compact_support(const GridFunction& f, const char* who) {
  double m = max_abs(f);
  if (m == 0.0) return;
  double shell = 0.0;
  if (f.dim == 1) {
    shell = std::max(std::abs(f.at(0)), std::abs(f.at(f.n - 1)));
  } else {
    for (int i = 0; i < f.n; ++i) {
      shell = std::max({shell, std::abs(f.at(i, 0)), std::abs(f.at(i, f.n - 1)),
                        std::abs(f.at(0, i)), std::abs(f.at(f.n - 1, i))});
    }
  }
  if (shell > 1e-8 * m)
    throw std::invalid_argument(std::string(who) + ": samples not negligible at the grid boundary");
}

}  // namespace detail

// Samples of f-hat on the dual grid (spacing 1/(2R), half-width N/(4R)),
// fhat(xi) = int f(x) e^{2 pi i xi.x} dx realized as the phase-corrected DFT.
inline GridFunction fourier_transform(const GridFunction& f) {
  f.validate();
  detail::require_compact_support(f, "fourier_transform");
  GridFunction out;
  out.dim = f.dim;
  out.n = f.n;
  out.half_width = f.n / (4.0 * f.half_width);
  const double h = f.spacing();
  Eigen::MatrixXcd e = detail::dft_phase_matrix(f);
  if (f.dim == 1) {
    Eigen::Map<const Eigen::VectorXcd> v(f.samples.data(), f.n);
    Eigen::VectorXcd w = h * (e * v);
    out.samples.assign(w.data(), w.data() + f.n);
  } else {
    Eigen::MatrixXcd m = detail::as_matrix(f);
    Eigen::MatrixXcd w = (h * h) * (e * m * e.transpose());
    out.samples.resize(static_cast<size_t>(f.n) * f.n);
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < f.n; ++j) out.at(i, j) = w(i, j);
  }
  return out;
}

// f-hat at arbitrary frequencies (tensor list for dim 2: result[a][b] = fhat(xi_a, xi_b)).
inline Eigen::MatrixXcd fourier_transform_at(const GridFunction& f,
                                             const std::vector<double>& freqs) {
  f.validate();
  const int n = f.n;
  const int m = static_cast<int>(freqs.size());
  const double h = f.spacing();
  Eigen::MatrixXcd e(m, n);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) {
      double arg = 2.0 * kPi * freqs[a] * f.coord(j);
      e(a, j) = cplx(std::cos(arg), std::sin(arg));
    }
  if (f.dim == 1) {
    Eigen::Map<const Eigen::VectorXcd> v(f.samples.data(), n);
    return h * (e * v);
  }
  return (h * h) * (e * detail::as_matrix(f) * e.transpose());
}

namespace detail {
// The zero-padded sum never wraps; a result carrying weight at the boundary
// means its true support spilled out of the box.
inline void check_result_support(const GridFunction& r, const char* who) {
  double m = max_abs(r);
  if (m == 0.0) return;
  double shell = 0.0;
  if (r.dim == 1) {
    shell = std::max(std::abs(r.at(0)), std::abs(r.at(r.n - 1)));
  } else {
    for (int i = 0; i < r.n; ++i)
      shell = std::max({shell, std::abs(r.at(i, 0)), std::abs(r.at(i, r.n - 1)),
                        std::abs(r.at(0, i)), std::abs(r.at(r.n - 1, i))});
  }
  if (shell > 1e-4 * m)
    throw SupportOverflowError(std::string(who) + ": result support exceeds the grid");
}
}  // namespace detail

// h^dim-weighted discrete convolution; the result lives on the same grid.
inline GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  f.validate();
  g.validate();
  if (f.dim != g.dim || f.n != g.n || f.half_width != g.half_width)
    throw std::invalid_argument("convolve: grids must match");
  GridFunction out = f;
  const int n = f.n;
  const double hd = std::pow(f.spacing(), f.dim);
  if (f.dim == 1) {
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) {
        int k = i - j + n / 2;
        if (k < 0 || k >= n) continue;
        acc += f.at(k) * g.at(j);
      }
      out.at(i) = hd * acc;
    }
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        cplx acc = 0.0;
        for (int c = std::max(0, a - n / 2); c < std::min(n, a + n / 2 + 1); ++c) {
          int ka = a - c + n / 2;
          if (ka < 0 || ka >= n) continue;
          for (int d = std::max(0, b - n / 2); d < std::min(n, b + n / 2 + 1); ++d) {
            int kb = b - d + n / 2;
            if (kb < 0 || kb >= n) continue;
            acc += f.at(ka, kb) * g.at(c, d);
          }
        }
        out.at(a, b) = hd * acc;
      }
  }
  detail::check_result_support(out, "convolve");
  return out;
}

// 8-point Lagrange interpolation of a dim-2 grid along the first axis at fixed
// column iy; x may fall between grid points.
inline cplx sample_interp_x(const GridFunction& f, double x, int iy) {
  const int n = f.n;
  const double h = f.spacing();
  double u = x / h + n / 2;  // fractional index
  int i0 = static_cast<int>(std::floor(u)) - 3;
  if (i0 < 0) i0 = 0;
  if (i0 > n - 8) i0 = n - 8;
  cplx acc = 0.0;
  for (int a = 0; a < 8; ++a) {
    double w = 1.0;
    for (int b = 0; b < 8; ++b)
      if (b != a) w *= (u - (i0 + b)) / static_cast<double>(a - b);
    acc += w * f.at(i0 + a, iy);
  }
  return acc;
}

// f(lambda x) resampled onto the same grid (8-point interpolation; samples
// falling outside the box are taken as 0).
inline GridFunction resample_scaled(const GridFunction& f, double lambda) {
  f.validate();
  GridFunction out = f;
  const int n = f.n;
  const double h = f.spacing();
  auto interp1 = [&](double x) -> cplx {
    double u = x / h + n / 2;
    if (u < 0.0 || u > n - 1) return 0.0;
    int i0 = std::clamp(static_cast<int>(std::floor(u)) - 3, 0, n - 8);
    cplx acc = 0.0;
    for (int a = 0; a < 8; ++a) {
      double w = 1.0;
      for (int b = 0; b < 8; ++b)
        if (b != a) w *= (u - (i0 + b)) / static_cast<double>(a - b);
      acc += w * f.at(i0 + a);
    }
    return acc;
  };
  auto interp2 = [&](double x, double y) -> cplx {
    double u = x / h + n / 2;
    double v = y / h + n / 2;
    if (u < 0.0 || u > n - 1 || v < 0.0 || v > n - 1) return 0.0;
    int i0 = std::clamp(static_cast<int>(std::floor(u)) - 3, 0, n - 8);
    int j0 = std::clamp(static_cast<int>(std::floor(v)) - 3, 0, n - 8);
    cplx acc = 0.0;
    for (int a = 0; a < 8; ++a) {
      double wa = 1.0;
      for (int b = 0; b < 8; ++b)
        if (b != a) wa *= (u - (i0 + b)) / static_cast<double>(a - b);
      for (int c = 0; c < 8; ++c) {
        double wc = 1.0;
        for (int b = 0; b < 8; ++b)
          if (b != c) wc *= (v - (j0 + b)) / static_cast<double>(c - b);
        acc += wa * wc * f.at(i0 + a, j0 + c);
      }
    }
    return acc;
  };
  if (f.dim == 1) {
    for (int i = 0; i < n; ++i) out.at(i) = interp1(lambda * f.coord(i));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = interp2(lambda * f.coord(i), lambda * f.coord(j));
  }
  return out;
}

}  // namespace sharphy::euclidean
