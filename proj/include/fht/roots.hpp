#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace fht {

/// Bisection for a sign change of f on [lo, hi]; returns the midpoint of
/// the final bracket. Assumes f(lo) and f(hi) have opposite signs.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol = 1e-15) {
  double flo = f(lo);
  for (int iter = 0; iter < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Sign changes of f on the open interval (lo, hi), located by sampling at
/// `samples` Chebyshev-clustered points and refining each bracket.
template <typename F>
std::vector<double> sign_changes(F&& f, double lo, double hi, int samples = 256) {
  std::vector<double> roots;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double prev_x = 0.0;
  double prev_v = 0.0;
  bool have_prev = false;
  for (int k = samples; k >= 1; --k) {
    const double x = mid + half * std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * samples));
    const double v = f(x);
    if (!std::isfinite(v)) continue;
    if (have_prev && v != 0.0 && prev_v != 0.0 && (v < 0.0) != (prev_v < 0.0)) {
      roots.push_back(bisect(f, prev_x, x));
    } else if (v == 0.0) {
      roots.push_back(x);
    }
    if (v != 0.0) {
      prev_x = x;
      prev_v = v;
      have_prev = true;
    }
  }
  return roots;
}

}  // namespace fht
