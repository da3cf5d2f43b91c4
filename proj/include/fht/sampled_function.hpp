#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fht/errors.hpp"

namespace fht {

using Complex = std::complex<double>;

enum class Parity { none, even, odd };

/// |f(x) - f(t)| <= constant * |x - t|^exponent.
struct Holder {
  double exponent = 1.0;
  double constant = 0.0;
};

/// A scalar function on (-1,1) given by an evaluation procedure plus the
/// metadata the quadrature needs: jump points (never evaluated as t),
/// kinks (continuous but non-smooth; quadrature splits there), an optional
/// Holder pair, a parity tag and an optional closed-form finite Hilbert
/// transform.
template <typename Scalar>
class SampledFunction {
 public:
  using Evaluator = std::function<Scalar(double)>;

  SampledFunction() : eval_([](double) { return Scalar(0); }) {}
  explicit SampledFunction(Evaluator eval) : eval_(std::move(eval)) {}

  Scalar operator()(double x) const { return eval_(x); }

  SampledFunction& with_holder(double exponent, double constant) {
    if (!(exponent > 0.0 && exponent <= 1.0) || !(constant >= 0.0)) {
      throw DomainError("Holder metadata needs exponent in (0,1] and constant >= 0");
    }
    holder_ = Holder{exponent, constant};
    return *this;
  }
  SampledFunction& with_parity(Parity p) {
    parity_ = p;
    return *this;
  }
  SampledFunction& with_jumps(std::vector<double> pts) {
    jumps_ = sorted_interior(std::move(pts));
    return *this;
  }
  SampledFunction& with_kinks(std::vector<double> pts) {
    kinks_ = sorted_interior(std::move(pts));
    return *this;
  }
  SampledFunction& with_transform(Evaluator closed_form) {
    transform_ = std::move(closed_form);
    return *this;
  }

  const std::optional<Holder>& holder() const { return holder_; }
  Parity parity() const { return parity_; }
  const std::vector<double>& jumps() const { return jumps_; }
  const std::vector<double>& kinks() const { return kinks_; }
  bool has_transform() const { return static_cast<bool>(transform_); }
  Scalar transform(double t) const { return transform_(t); }

  /// Jumps and kinks merged, sorted, inside (-1,1).
  std::vector<double> breakpoints() const {
    std::vector<double> all = jumps_;
    all.insert(all.end(), kinks_.begin(), kinks_.end());
    return sorted_interior(std::move(all));
  }

  bool is_jump(double x) const {
    return std::any_of(jumps_.begin(), jumps_.end(), [x](double j) {
      return std::abs(x - j) <= 4.0 * std::numeric_limits<double>::epsilon();
    });
  }

  /// Value approached from inside the piece that clings to point s on the
  /// side of `toward`. Equals f(s) unless s is a jump.
  Scalar limit_at(double s, double toward) const {
    if (!is_jump(s)) return eval_(s);
    const double nudge = 1e-13 * std::max(1.0, std::abs(toward - s));
    return eval_(s + (toward > s ? nudge : -nudge));
  }

  /// Pointwise product with a real weight; breakpoints are kept.
  SampledFunction times(std::function<double(double)> weight) const {
    SampledFunction out([f = eval_, w = std::move(weight)](double x) {
      return Scalar(w(x)) * f(x);
    });
    out.jumps_ = jumps_;
    out.kinks_ = kinks_;
    return out;
  }

  SampledFunction scaled(Scalar c) const {
    SampledFunction out([f = eval_, c](double x) { return c * f(x); });
    out.jumps_ = jumps_;
    out.kinks_ = kinks_;
    out.parity_ = parity_;
    if (holder_) out.holder_ = Holder{holder_->exponent, std::abs(c) * holder_->constant};
    if (transform_) out.transform_ = [g = transform_, c](double t) { return c * g(t); };
    return out;
  }

 private:
  static std::vector<double> sorted_interior(std::vector<double> pts) {
    std::erase_if(pts, [](double x) { return !(x > -1.0 && x < 1.0); });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  Evaluator eval_;
  std::optional<Holder> holder_;
  Parity parity_ = Parity::none;
  std::vector<double> jumps_;
  std::vector<double> kinks_;
  Evaluator transform_;
};

using Function = SampledFunction<Complex>;
using RealFunction = SampledFunction<double>;

/// Largest value of |f(x)-f(t)| - K|x-t|^lambda over `pairs` seeded random
/// pairs; <= 0 means the declared Holder pair held on every sample.
template <typename Scalar>
double holder_excess(const SampledFunction<Scalar>& f, int pairs, std::uint64_t seed) {
  if (!f.holder()) throw PreconditionError("holder_excess: function has no Holder metadata");
  const auto [lambda, K] = *f.holder();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < pairs; ++i) {
    const double x = pick(rng);
    const double t = pick(rng);
    const double excess = std::abs(f(x) - f(t)) - K * std::pow(std::abs(x - t), lambda);
    worst = std::max(worst, excess);
  }
  return worst;
}

}  // namespace fht
