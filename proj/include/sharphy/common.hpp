#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharphy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Numerical failure of an iterative/adaptive scheme (node doubling exhausted,
// residual above the documented resolution, ...).  Distinct from argument
// validation, which throws std::invalid_argument.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

class SupportOverflowError : public std::runtime_error {
 public:
  explicit SupportOverflowError(const std::string& what) : std::runtime_error(what) {}
};

class GridResolutionError : public std::runtime_error {
 public:
  explicit GridResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics an operation can report alongside its value.
struct ConvergenceInfo {
  bool truncation_warning = false;
  bool tail_warning = false;
  double last_change = 0.0;  // change observed at the final refinement step
  int refinements = 0;
};

// A sweep of (parameter -> ratio) values probing one inequality.
struct RatioCurve {
  std::string label;          // which inequality is being probed
  std::vector<double> param;  // sweep parameter (t, width, delta, ...)
  std::vector<double> ratio;
  double limit_constant = 0.0;  // the sharp constant the curve approaches
};

namespace detail {

inline double sq(double x) { return x * x; }

// Composite Simpson on [a,b] with n panels (n even not required; uses 2n+1 points).
template <typename F>
auto simpson(F&& f, double a, double b, int panels) -> decltype(f(a)) {
  using R = decltype(f(a));
  const double h = (b - a) / (2.0 * panels);
  R s = f(a) + f(b);
  R odd{}, even{};
  for (int i = 1; i < 2 * panels; i += 2) odd += f(a + i * h);
  for (int i = 2; i < 2 * panels; i += 2) even += f(a + i * h);
  return (s + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

// Panel-doubling Simpson: refine until the value changes by less than
// tol * max(scale, |value|).  Throws QuadratureError past max_panels.
template <typename F>
auto integrate(F&& f, double a, double b, double tol, int start_panels = 32,
               int max_panels = (1 << 21), double scale = 1.0,
               ConvergenceInfo* info = nullptr) -> decltype(f(a)) {
  using R = decltype(f(a));
  if (!(b > a)) return R{};
  int n = start_panels;
  R prev = simpson(f, a, b, n);
  for (n *= 2; n <= max_panels; n *= 2) {
    R cur = simpson(f, a, b, n);
    double change = std::abs(cur - prev);
    if (info) {
      info->last_change = change;
      ++info->refinements;
    }
    if (change <= tol * std::max(scale, std::abs(cur))) return cur;
    prev = cur;
  }
  throw QuadratureError("integrate: no convergence on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
}

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail
}  // namespace sharphy
