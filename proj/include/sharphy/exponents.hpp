#pragma once

// Closed-form constants and exponent arithmetic: conjugate exponents, the
// Babenko--Beckner constant B_p = p^{1/2p} / p'^{1/2p'}, sharp Euclidean Young
// constants, and the Young/Hausdorff-Young consistency identity H_p = Y^{1/k}
// for p' = 2k.

#include <cstdint>

#include "sharphy/common.hpp"

namespace sharphy::exponents {

// Holder pair (p, p').  p' = infinity is a real state of the type, never a
// large float; callers must branch on conjugate_is_infinite() before touching
// the numeric conjugate.
class Exponent {
 public:
  explicit Exponent(double p) : p_(p) {
    if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in [1,2]");
  }
  double p() const { return p_; }
  bool conjugate_is_infinite() const { return p_ == 1.0; }
  double conjugate() const {
    if (conjugate_is_infinite())
      throw std::logic_error("p' is infinite; branch on conjugate_is_infinite()");
    return p_ / (p_ - 1.0);
  }

 private:
  double p_;
};

struct ConstantReport {
  std::string label;
  double value = 0.0;
  double p = 2.0;
  int dimension = 1;
};

// p / (p-1) on [1,2]; +infinity at p = 1.
inline double conjugate(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in [1,2]");
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

namespace detail {
// q^{1/(2q)} / q'^{1/(2q')} for q in [1,inf], with 1/q' = 1 - 1/q.  This is
// Beckner's A_q; for q in [1,2] it equals B_q, for q > 2 it equals 1/B_{q'}.
inline double bb_formula(double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("exponent must be >= 1");
  double inv_q = (q == kInf) ? 0.0 : 1.0 / q;
  double inv_qp = 1.0 - inv_q;
  // x^{1/2x} = exp(log(x)/(2x)); the limit at x = inf is 1, and at x = 1 it is 1.
  auto half_pow = [](double inv_x) {
    if (inv_x == 0.0) return 1.0;
    return std::exp(-0.5 * inv_x * std::log(inv_x));
  };
  return half_pow(inv_q) / half_pow(inv_qp);
}
}  // namespace detail

// B_p = p^{1/2p} / p'^{1/2p'} for p in [1,2]; B_1 = B_2 = 1.
inline double babenko_beckner(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in [1,2]");
  return detail::bb_formula(p);
}

// Sharp Euclidean Young constant (B_{r'} B_{p_1} ... B_{p_k})^n on R^n, where
// 1/r' = sum_j 1/p_j' and each factor is the literal formula q^{1/2q}/q'^{1/2q'}
// (so B_{r'} >= 1 when r' > 2; the k = 1 constant is exactly 1).
inline double young_constant_euclidean(const std::vector<double>& p_list, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (p_list.empty()) throw std::invalid_argument("need at least one exponent");
  double inv_rp = 0.0;
  double prod = 1.0;
  for (double p : p_list) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
    double inv_pp = (p == kInf) ? 1.0 : 1.0 - 1.0 / p;
    inv_rp += inv_pp;
    prod *= detail::bb_formula(p);
  }
  if (inv_rp > 1.0 + 1e-15) throw std::invalid_argument("sum of 1/p_j' exceeds 1");
  double rp = (inv_rp <= 1e-300) ? kInf : 1.0 / inv_rp;
  prod *= detail::bb_formula(rp);
  return std::pow(prod, n);
}

// Prop.-style consistency: for p' = 2k, B_p must equal the k-fold Young
// constant's k-th root on R.  Pure arithmetic identity; checked to 1e-12.
inline bool yh_relation_check(double p) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in (1,2]");
  double pp = p / (p - 1.0);
  double k_real = pp / 2.0;
  int k = static_cast<int>(std::lround(k_real));
  if (k < 1 || std::abs(k_real - k) > 1e-9)
    throw std::invalid_argument("p' must be an even integer");
  std::vector<double> ps(static_cast<size_t>(k), p);
  double lhs = babenko_beckner(p);
  double rhs = std::pow(young_constant_euclidean(ps, 1), 1.0 / k);
  return std::abs(lhs - rhs) <= 1e-12;
}

}  // namespace sharphy::exponents
