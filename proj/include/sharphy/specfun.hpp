#pragma once

// Special functions in the conventions the Weyl-transform identities need:
// orthonormal Hermite functions with h_0(x) = 2^{1/4} e^{-pi x^2} (so that the
// e^{+2 pi i} Fourier transform has eigenvalues i^k), Laguerre polynomials and
// the Laguerre functions chi_k(z) = e^{-(pi/2)|z|^2} L_k(pi |z|^2), and Bessel
// J_alpha by power series below x = 12 and the Hankel asymptotic beyond.

#include "sharphy/common.hpp"
#include "sharphy/quadrature.hpp"

namespace sharphy::specfun {

struct LaguerreFunctionHandle {
  int k = 0;
  double alpha = 0.0;
};

// h_k(x), ||h_k||_2 = 1, via the scaled three-term recurrence
//   h_{k+1} = sqrt(2/(k+1)) sqrt(2 pi) x h_k - sqrt(k/(k+1)) h_{k-1}.
inline double hermite_function(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_function: k must be >= 0");
  double hm1 = 0.0;
  double h = std::pow(2.0, 0.25) * std::exp(-kPi * x * x);
  const double sx = std::sqrt(2.0 * kPi) * x;
  for (int j = 0; j < k; ++j) {
    double h1 = std::sqrt(2.0 / (j + 1.0)) * sx * h - std::sqrt(j / (j + 1.0)) * hm1;
    hm1 = h;
    h = h1;
  }
  return h;
}

// h_0(x), ..., h_K(x) in one pass.
inline std::vector<double> hermite_values(int kmax, double x) {
  if (kmax < 0) throw std::invalid_argument("hermite_values: kmax must be >= 0");
  std::vector<double> out(kmax + 1);
  out[0] = std::pow(2.0, 0.25) * std::exp(-kPi * x * x);
  const double sx = std::sqrt(2.0 * kPi) * x;
  for (int j = 0; j < kmax; ++j) {
    double prev = (j == 0) ? 0.0 : out[j - 1];
    out[j + 1] = std::sqrt(2.0 / (j + 1.0)) * sx * out[j] - std::sqrt(j / (j + 1.0)) * prev;
  }
  return out;
}

// Standard Laguerre polynomial L_k^alpha(x).
inline double laguerre_poly(int k, double alpha, double x) {
  if (k < 0) throw std::invalid_argument("laguerre_poly: k must be >= 0");
  if (x < 0.0) throw std::invalid_argument("laguerre_poly: x must be >= 0");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre_poly: alpha must exceed -1");
  double lm1 = 0.0;
  double l = 1.0;
  for (int j = 0; j < k; ++j) {
    double l1 = ((2.0 * j + 1.0 + alpha - x) * l - (j + alpha) * lm1) / (j + 1.0);
    lm1 = l;
    l = l1;
  }
  return l;
}

// e^{-x/2} L_k(x); bounded by 1 on [0, inf), usable at arguments where the bare
// polynomial would overflow.
inline double laguerre_scaled(int k, double x) {
  double lm1 = 0.0;
  double l = std::exp(-0.5 * x);
  for (int j = 0; j < k; ++j) {
    double l1 = ((2.0 * j + 1.0 - x) * l - j * lm1) / (j + 1.0);
    lm1 = l;
    l = l1;
  }
  return l;
}

inline std::vector<double> laguerre_scaled_values(int kmax, double x) {
  std::vector<double> out(kmax + 1);
  out[0] = std::exp(-0.5 * x);
  for (int j = 0; j < kmax; ++j) {
    double prev = (j == 0) ? 0.0 : out[j - 1];
    out[j + 1] = ((2.0 * j + 1.0 - x) * out[j] - j * prev) / (j + 1.0);
  }
  return out;
}

// chi_k(z) = e^{-(pi/2)|z|^2} L_k(pi |z|^2); real, radial, ||chi_k||_2 = 1.
inline double chi(int k, cplx z) {
  if (k < 0) throw std::invalid_argument("chi: k must be >= 0");
  return laguerre_scaled(k, kPi * std::norm(z));
}

inline double chi_radial(int k, double r) { return laguerre_scaled(k, kPi * r * r); }

// |z|^2 beyond which chi_k has left its oscillatory band and decays fast.
inline double chi_support_radius(int k) {
  double u = 4.0 * k + 2.0 + 12.0 * std::cbrt(k + 1.0) + 30.0;
  return std::sqrt(u / kPi);
}

// J_alpha(x) for x >= 0.  Crossover at x = 12: power series below, Hankel
// asymptotic above; the two agree to ~4e-11 there (pinned by a fixture test).
inline double bessel_j(double alpha, double x) {
  if (x < 0.0) throw std::invalid_argument("bessel_j: x must be >= 0");
  if (alpha < 0.0) throw std::invalid_argument("bessel_j: alpha must be >= 0");
  if (x < 12.0) {
    double half = 0.5 * x;
    double term = std::pow(half, alpha) / std::tgamma(alpha + 1.0);
    double sum = term;
    double h2 = half * half;
    for (int m = 1; m < 200; ++m) {
      term *= -h2 / (m * (m + alpha));
      sum += term;
      if (std::abs(term) <= 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
  }
  // J_a(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w], w = x - a pi/2 - pi/4,
  // with P, Q summed to their smallest term.
  const double mu = 4.0 * alpha * alpha;
  const double w = x - alpha * kPi / 2.0 - kPi / 4.0;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double prev_mag = kInf;
  for (int m = 1; m < 60; ++m) {
    term *= (mu - sharphy::detail::sq(2.0 * m - 1.0)) / (m * 8.0 * x);
    double mag = std::abs(term);
    if (mag >= prev_mag || mag < 1e-18) break;
    prev_mag = mag;
    if (m % 2 == 1) {
      q += (m % 4 == 1) ? term : -term;
    } else {
      p += (m % 4 == 2) ? -term : term;
    }
  }
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(w) - q * std::sin(w));
}

// ||chi_k||_1 = int_0^inf e^{-u/2} |L_k(u)| du by panelled quadrature.
inline double chi_l1_norm(int k) {
  double umax = kPi * sharphy::detail::sq(chi_support_radius(k));
  auto f = [k](double u) { return std::abs(laguerre_scaled(k, u)); };
  return sharphy::detail::integrate(f, 0.0, umax, 1e-9, 64 + 8 * k);
}

// Residual of L_k^a(x) = e^x x^{-a/2}/k! int_0^inf t^{k+a/2} J_a(2 sqrt(xt)) e^{-t} dt,
// with the right side done by Gauss-Laguerre; node doubling must settle to 1e-8.
inline double verify_bela1(int k, double alpha, double x) {
  if (k < 0 || k > 20) throw std::invalid_argument("verify_bela1: need 0 <= k <= 20");
  if (!(x > 0.0) || x > 20.0) throw std::invalid_argument("verify_bela1: need 0 < x <= 20");
  double lgk = std::lgamma(k + 1.0);
  auto rhs_with = [&](int n) {
    const auto& rule = quadrature::gauss_laguerre(n, 0.0);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double t = rule.nodes[i];
      // t^{k+a/2} e^{x - lgk}: keep in logs until the last moment
      double mag = std::exp((k + alpha / 2.0) * std::log(t) + x - lgk - alpha / 2.0 * std::log(x));
      s += rule.weights[i] * mag * bessel_j(alpha, 2.0 * std::sqrt(x * t));
    }
    return s;
  };
  double prev = rhs_with(128);
  double cur = prev;
  bool converged = false;
  for (int n = 256; n <= 4096; n *= 2) {
    cur = rhs_with(n);
    if (std::abs(cur - prev) <= 1e-8) {
      converged = true;
      break;
    }
    prev = cur;
  }
  if (!converged) throw QuadratureError("verify_bela1: node doubling did not settle");
  return std::abs(cur - laguerre_poly(k, alpha, x));
}

}  // namespace sharphy::specfun
