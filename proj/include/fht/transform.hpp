#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Core>

#include "fht/errors.hpp"
#include "fht/interval_set.hpp"
#include "fht/quadrature.hpp"
#include "fht/sampled_function.hpp"

namespace fht {

/// w(x) = sqrt(1 - x^2), evaluated as sqrt((1-x)(1+x)).
inline double weight(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

/// Exact principal value T(chi_S)(t) = (1/pi) sum_i log(|b_i - t| / |a_i - t|).
/// Throws DomainError when t is an endpoint of S or lies outside (-1,1).
double fht_indicator(const IntervalSet& S, double t);

/// (2/pi) K B(1/2, lambda): uniform bound on w(t)|T(phi/w)(t)| for a
/// lambda-Holder phi with constant K.
double holder_bound(double lambda, double K);

namespace detail {

inline void require_open(double t, const char* what) {
  if (!(t > -1.0 && t < 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": point " << t << " is outside (-1,1)";
    throw DomainError(msg.str());
  }
}

/// T(f)(t) by anchored singularity subtraction on a graded composite
/// Gauss-Legendre rule; no clearance checks. On every subinterval I the
/// anchor c_I is f(t) when I touches t and the one-sided limit at the
/// endpoint nearest t otherwise; the anchor's Cauchy integral is added in
/// closed form.
template <typename Scalar>
Scalar principal_value(const SampledFunction<Scalar>& f, double t, int order,
                       const Grading& grading = {}) {
  std::vector<double> interior = f.breakpoints();
  interior.push_back(t);
  const std::vector<double> breaks = make_breaks(-1.0, 1.0, interior);
  const Scalar ft = f(t);

  Scalar total(0);
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double p = breaks[i];
    const double q = breaks[i + 1];
    Scalar anchor;
    double log_term;
    if (q == t) {
      anchor = ft;
      log_term = -std::log(t - p);
    } else if (p == t) {
      anchor = ft;
      log_term = std::log(q - t);
    } else {
      const bool left_of_t = q < t;
      anchor = left_of_t ? f.limit_at(q, p) : f.limit_at(p, q);
      log_term = std::log(std::abs(q - t)) - std::log(std::abs(p - t));
    }
    nodes.clear();
    weights.clear();
    append_graded(p, q, order, grading, nodes, weights);
    Scalar piece(0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      piece += weights[k] * ((f(nodes[k]) - anchor) / (nodes[k] - t));
    }
    total += piece + anchor * log_term;
  }
  return total / std::numbers::pi;
}

}  // namespace detail

/// Finite Hilbert transform T(f)(t) by singularity subtraction.
/// Throws DomainError at a declared jump of f and ClearanceError when t is
/// within the configured clearance of +-1.
template <typename Scalar>
Scalar fht_pv(const SampledFunction<Scalar>& f, double t, const QuadratureConfig& cfg) {
  cfg.validate();
  detail::require_open(t, "fht_pv");
  if (f.is_jump(t)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "fht_pv: t = " << t << " is a declared jump point";
    throw DomainError(msg.str());
  }
  if (1.0 - std::abs(t) < cfg.clearance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "fht_pv: t = " << t << " is within clearance " << cfg.clearance << " of +-1";
    throw ClearanceError(msg.str());
  }
  return detail::principal_value(f, t, cfg.panel_order());
}

/// T(phi/w) for a Holder continuous phi, bound to phi so that repeated
/// evaluation reuses the sampled node values. With chebyshev_weighted the
/// regularized integrand (phi(x)-phi(t))/((x-t) w(x)) is summed over N
/// Gauss-Chebyshev nodes; with subtraction_legendre it is integrated on the
/// graded Legendre rule split at t and at the kinks of phi.
template <typename Scalar>
class WeightedTransform {
 public:
  WeightedTransform(SampledFunction<Scalar> phi, const QuadratureConfig& cfg)
      : phi_(std::move(phi)), cfg_(cfg) {
    cfg_.validate();
    if (!phi_.holder()) {
      throw PreconditionError("fht_weighted: phi needs Holder metadata (lambda, K)");
    }
    if (cfg_.scheme == Scheme::chebyshev_weighted) {
      const QuadratureRule rule = gauss_chebyshev(cfg_.nodes);
      nodes_ = rule.nodes;
      values_.resize(nodes_.size());
      for (Eigen::Index k = 0; k < nodes_.size(); ++k) values_(k) = phi_(nodes_(k));
    }
  }

  Scalar operator()(double t) const {
    detail::require_open(t, "fht_weighted");
    const Scalar pt = phi_(t);
    if (cfg_.scheme == Scheme::chebyshev_weighted) {
      const Eigen::ArrayXd gap = nodes_ - t;
      if (gap.abs().minCoeff() > 1e-15) {
        const Eigen::Array<Scalar, Eigen::Dynamic, 1> diff = values_ - pt;
        return (diff * gap.inverse().template cast<Scalar>()).sum() /
               static_cast<double>(nodes_.size());
      }
      Scalar sum(0);
      for (Eigen::Index k = 0; k < nodes_.size(); ++k) {
        if (std::abs(gap(k)) > 1e-15) sum += (values_(k) - pt) / gap(k);
      }
      return sum / static_cast<double>(nodes_.size());
    }
    std::vector<double> interior = phi_.breakpoints();
    interior.push_back(t);
    const std::vector<double> breaks = make_breaks(-1.0, 1.0, interior);
    const QuadratureRule rule = composite_rule(breaks, cfg_.panel_order());
    Scalar sum(0);
    for (Eigen::Index k = 0; k < rule.size(); ++k) {
      const double x = rule.nodes(k);
      sum += rule.weights(k) * ((phi_(x) - pt) / ((x - t) * weight(x)));
    }
    return sum / std::numbers::pi;
  }

  const SampledFunction<Scalar>& phi() const { return phi_; }

 private:
  SampledFunction<Scalar> phi_;
  QuadratureConfig cfg_;
  Eigen::ArrayXd nodes_;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> values_;
};

/// T(phi/w)(t); see WeightedTransform.
template <typename Scalar>
Scalar fht_weighted(const SampledFunction<Scalar>& phi, double t, const QuadratureConfig& cfg) {
  return WeightedTransform<Scalar>(phi, cfg)(t);
}

/// Auxiliary operator g -> -(1/w) T(w g), evaluated at x with |x| <= 1 - delta.
template <typename Scalar>
Scalar t_hat(const SampledFunction<Scalar>& g, double x, const QuadratureConfig& cfg) {
  cfg.validate();
  detail::require_open(x, "t_hat");
  if (1.0 - std::abs(x) < cfg.clearance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "t_hat: x = " << x << " is within clearance " << cfg.clearance << " of +-1";
    throw ClearanceError(msg.str());
  }
  const SampledFunction<Scalar> wg = g.times(weight);
  return -detail::principal_value(wg, x, cfg.panel_order()) / weight(x);
}

/// Common test functions.
template <typename Scalar = Complex>
SampledFunction<Scalar> constant(Scalar c) {
  SampledFunction<Scalar> f([c](double) { return c; });
  f.with_holder(1.0, 0.0).with_parity(Parity::even);
  return f;
}

template <typename Scalar = Complex>
SampledFunction<Scalar> monomial(int k) {
  SampledFunction<Scalar> f([k](double x) { return Scalar(std::pow(x, k)); });
  f.with_holder(1.0, k == 0 ? 0.0 : static_cast<double>(k))
      .with_parity(k % 2 == 0 ? Parity::even : Parity::odd);
  return f;
}

/// chi_S with jumps at its interior endpoints and the closed-form transform.
template <typename Scalar = Complex>
SampledFunction<Scalar> indicator(const IntervalSet& S) {
  SampledFunction<Scalar> f([S](double x) { return Scalar(S.contains(x) ? 1.0 : 0.0); });
  f.with_jumps(S.interior_endpoints());
  f.with_transform([S](double t) { return Scalar(fht_indicator(S, t)); });
  if (S == S.reflected()) f.with_parity(Parity::even);
  return f;
}

}  // namespace fht
