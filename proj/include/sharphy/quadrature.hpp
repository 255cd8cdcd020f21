#pragma once

// Gauss-Laguerre and Gauss-Hermite rules (Newton iteration on scaled
// recurrences, Christoffel weights) plus simple equispaced rules.  The scaled
// functions e^{-x/2} L_k(x) and e^{-x^2/2} p_k(x) stay O(1), so node counts in
// the thousands are safe from overflow.

#include <map>
#include <memory>
#include <mutex>

#include "sharphy/common.hpp"

namespace sharphy::quadrature {

enum class Kind { kGaussLaguerre, kGaussHermite, kTrapezoid, kSimpson };

struct QuadratureRule {
  Kind kind = Kind::kTrapezoid;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  // Gauss rules only: weights * exp(+node) resp. exp(+node^2), i.e. the
  // weights for integrating a plain (unweighted) integrand sampled at nodes.
  std::vector<double> weights_unweighted;
};

namespace detail {

// L_n^alpha up to a positive common factor (rescaled whenever the recurrence
// grows past 1e150, so x in the tens of thousands stays finite); the sign and
// the Newton ratio L_n / (d/dx e^{-x/2} L_n scaled back) are exact.
struct LaguerreRoot {
  double sign_n;        // sign of L_n(x)
  double newton_ratio;  // (e^{-x/2} L_n) / (d/dx e^{-x/2} L_n)
};

inline LaguerreRoot laguerre_root_eval(int n, double alpha, double x) {
  double mkm1 = 0.0;
  double mk = 1.0;  // L_0 up to scale
  for (int k = 0; k < n; ++k) {
    double mk1 = ((2.0 * k + 1.0 + alpha - x) * mk - (k + alpha) * mkm1) / (k + 1.0);
    mkm1 = mk;
    mk = mk1;
    if (std::abs(mk) > 1e150) {
      mk *= 1e-150;
      mkm1 *= 1e-150;
    }
  }
  double deriv_poly = (x > 0.0) ? (n * mk - (n + alpha) * mkm1) / x : 0.0;
  double denom = deriv_poly - 0.5 * mk;
  return {mk > 0.0 ? 1.0 : (mk < 0.0 ? -1.0 : 0.0), mk / denom};
}

// Christoffel weight-times-e^{x}: 1 / sum_{k<n} (e^{-x/2} l_k(x))^2 with the
// orthonormal l_k, evaluated through a shared log-scale so neither the
// e^{-x/2} seed nor the growth of the recurrence can underflow or overflow.
inline double laguerre_christoffel_unweighted(int n, double alpha, double x,
                                              const std::vector<double>& inv_norm) {
  double acc = -x;  // log of the square of the running scale factor e^{-x/2}
  double mkm1 = 0.0;
  double mk = 1.0;
  double s = sharphy::detail::sq(mk * inv_norm[0]);
  for (int k = 0; k + 1 < n; ++k) {
    double mk1 = ((2.0 * k + 1.0 + alpha - x) * mk - (k + alpha) * mkm1) / (k + 1.0);
    mkm1 = mk;
    mk = mk1;
    s += sharphy::detail::sq(mk * inv_norm[k + 1]);
    if (std::abs(mk) > 1e150) {
      mk *= 1e-150;
      mkm1 *= 1e-150;
      s *= 1e-300;
      acc += 300.0 * std::log(10.0);
    }
  }
  return std::exp(-acc - std::log(s));
}

inline const QuadratureRule& cached(Kind kind, int n, double alpha,
                                    QuadratureRule (*build)(int, double)) {
  struct Key {
    Kind kind;
    int n;
    double alpha;
    bool operator<(const Key& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (n != o.n) return n < o.n;
      return alpha < o.alpha;
    }
  };
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[Key{kind, n, alpha}];
  if (!slot) slot = std::make_unique<QuadratureRule>(build(n, alpha));
  return *slot;
}

inline QuadratureRule build_gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("node count must be >= 1");
  if (alpha <= -1.0) throw std::invalid_argument("alpha must exceed -1");
  QuadratureRule rule;
  rule.kind = Kind::kGaussLaguerre;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.weights_unweighted.resize(n);

  // squared norms h_k = Gamma(k+alpha+1)/k! accumulated as ratios
  std::vector<double> inv_norm(n);  // 1/sqrt(h_k)
  double h = std::tgamma(alpha + 1.0);
  inv_norm[0] = 1.0 / std::sqrt(h);
  for (int k = 1; k < n; ++k) {
    h *= (k + alpha) / k;
    inv_norm[k] = 1.0 / std::sqrt(h);
  }

  auto eval = [&](double x) { return scaled_laguerre_pair(n, alpha, x); };
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // initial guess: small-index formulas, then gap extrapolation
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      z = rule.nodes[0] + (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      z = rule.nodes[i - 1] + 1.05 * (rule.nodes[i - 1] - rule.nodes[i - 2]);
    }
    // bracket the root: just past the previous root the sign is fixed, expand
    // rightward until it flips
    double lo, hi;
    if (i == 0) {
      lo = 1e-12;
      hi = 2.0 * z;
    } else {
      double gap = (i == 1) ? z - rule.nodes[0] : rule.nodes[i - 1] - rule.nodes[i - 2];
      lo = rule.nodes[i - 1] + 1e-7 * gap;
      hi = rule.nodes[i - 1] + 1.5 * gap;
    }
    double flo = eval(lo).value_n;
    int expansions = 0;
    while (eval(hi).value_n * flo > 0.0) {
      double gap = hi - lo;
      hi += gap;
      if (++expansions > 200) throw QuadratureError("gauss_laguerre: root bracketing failed");
    }
    // safeguarded Newton inside the bracket
    z = std::clamp(z, lo, hi);
    bool ok = false;
    for (int it = 0; it < 200; ++it) {
      auto s = eval(z);
      if (s.value_n * flo > 0.0)
        lo = z;
      else
        hi = z;
      double fp = s.deriv_poly_n - 0.5 * s.value_n;  // d/dx of e^{-x/2} L_n
      double dz = s.value_n / fp;
      double znew = z - dz;
      if (!(znew > lo && znew < hi)) {
        znew = 0.5 * (lo + hi);
        dz = z - znew;
      }
      z = znew;
      if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z)) || hi - lo <= 1e-15 * (1.0 + hi)) {
        ok = true;
        break;
      }
    }
    if (!ok) throw QuadratureError("gauss_laguerre: Newton failed to converge");
    rule.nodes[i] = z;
  }

  for (int i = 0; i < n; ++i) {
    // Christoffel: w_i e^{x_i} = 1 / sum_{k<n} (e^{-x/2} l_k)^2, l_k orthonormal
    double x = rule.nodes[i];
    double lkm1 = 0.0;
    double lk = std::exp(-0.5 * x);
    double acc = sharphy::detail::sq(lk * inv_norm[0]);
    for (int k = 0; k + 1 < n; ++k) {
      double lk1 = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
      lkm1 = lk;
      lk = lk1;
      acc += sharphy::detail::sq(lk * inv_norm[k + 1]);
    }
    rule.weights_unweighted[i] = 1.0 / acc;
    rule.weights[i] = std::exp(-x) / acc;
  }
  return rule;
}

inline QuadratureRule build_gauss_hermite(int n, double /*alpha*/) {
  if (n < 1) throw std::invalid_argument("node count must be >= 1");
  QuadratureRule rule;
  rule.kind = Kind::kGaussHermite;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.weights_unweighted.resize(n);

  // scaled orthonormal Hermite functions for weight e^{-x^2}
  auto phi_pair = [n](double x, double& pn, double& pnm1) {
    double pkm1 = 0.0;
    double pk = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
      double pk1 = x * std::sqrt(2.0 / (k + 1.0)) * pk - std::sqrt(k / (k + 1.0)) * pkm1;
      pkm1 = pk;
      pk = pk1;
    }
    pn = pk;
    pnm1 = pkm1;
  };

  const int m = (n + 1) / 2;
  std::vector<double> upper(m);
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(n, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * upper[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * upper[1];
    } else {
      z = 2.0 * z - upper[i - 2];
    }
    bool ok = false;
    for (int it = 0; it < 200; ++it) {
      double pn, pnm1;
      phi_pair(z, pn, pnm1);
      double fp = std::sqrt(2.0 * n) * pnm1 - z * pn;  // d/dx of e^{-x^2/2} p_n
      double dz = pn / fp;
      z -= dz;
      if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) {
        ok = true;
        break;
      }
    }
    if (!ok) throw QuadratureError("gauss_hermite: Newton failed to converge");
    upper[i] = z;
  }
  for (int i = 0; i < m; ++i) {
    rule.nodes[n - 1 - i] = upper[i];
    rule.nodes[i] = -upper[i];
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    double pkm1 = 0.0;
    double pk = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    double acc = pk * pk;
    for (int k = 0; k + 1 < n; ++k) {
      double pk1 = x * std::sqrt(2.0 / (k + 1.0)) * pk - std::sqrt(k / (k + 1.0)) * pkm1;
      pkm1 = pk;
      pk = pk1;
      acc += pk * pk;
    }
    rule.weights_unweighted[i] = 1.0 / acc;
    rule.weights[i] = std::exp(-x * x) / acc;
  }
  return rule;
}

}  // namespace detail

// Rules are cached and immutable; references stay valid for the process lifetime.
inline const QuadratureRule& gauss_laguerre(int n, double alpha = 0.0) {
  return detail::cached(Kind::kGaussLaguerre, n, alpha, detail::build_gauss_laguerre);
}

inline const QuadratureRule& gauss_hermite(int n) {
  return detail::cached(Kind::kGaussHermite, n, 0.0, detail::build_gauss_hermite);
}

inline QuadratureRule trapezoid_rule(double a, double b, int n) {
  if (n < 2 || !(b > a)) throw std::invalid_argument("bad trapezoid rule spec");
  QuadratureRule rule;
  rule.kind = Kind::kTrapezoid;
  const double h = (b - a) / (n - 1);
  rule.nodes.resize(n);
  rule.weights.assign(n, h);
  for (int i = 0; i < n; ++i) rule.nodes[i] = a + i * h;
  rule.weights.front() = rule.weights.back() = 0.5 * h;
  return rule;
}

inline QuadratureRule simpson_rule(double a, double b, int panels) {
  if (panels < 1 || !(b > a)) throw std::invalid_argument("bad simpson rule spec");
  QuadratureRule rule;
  rule.kind = Kind::kSimpson;
  const int n = 2 * panels + 1;
  const double h = (b - a) / (n - 1);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = a + i * h;
    rule.weights[i] = (i == 0 || i == n - 1) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
  }
  return rule;
}

}  // namespace sharphy::quadrature
