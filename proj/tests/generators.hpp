#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fht/interval_set.hpp"

namespace gen {

/// SplitMix64; small, seedable and reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0,1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

/// Up to `max_pieces` disjoint intervals with endpoints at least `gap` apart.
inline fht::IntervalSet interval_set(Rng& rng, int max_pieces, double gap = 1e-3) {
  const int k = rng.integer(1, max_pieces);
  for (;;) {
    std::vector<double> pts(2 * k);
    for (double& p : pts) p = rng.uniform(-1.0, 1.0);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && pts[i + 1] - pts[i] >= gap;
    if (ok) return fht::IntervalSet::from_endpoints(pts);
  }
}

inline fht::IntervalSet interval(Rng& rng, double lo = -1.0, double hi = 1.0, double min_len = 1e-2) {
  for (;;) {
    double a = rng.uniform(lo, hi);
    double b = rng.uniform(lo, hi);
    if (a > b) std::swap(a, b);
    if (b - a >= min_len) return fht::IntervalSet{{a, b}};
  }
}

/// A point of (-1+clear, 1-clear) at least `clear` from every point of `avoid`.
inline double admissible(Rng& rng, const std::vector<double>& avoid, double clear) {
  for (;;) {
    const double t = rng.uniform(-1.0 + clear, 1.0 - clear);
    if (std::none_of(avoid.begin(), avoid.end(), [&](double x) { return std::abs(x - t) < clear; })) return t;
  }
}

}  // namespace gen
