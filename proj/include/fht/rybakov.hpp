#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fht/quadrature.hpp"
#include "fht/sampled_function.hpp"
#include "fht/transform.hpp"

namespace fht {

/// Psi(t) in closed form, t in (0,1).
double psi(double t);

/// Psi(t) by Gauss-Legendre quadrature of its two defining integrals after
/// the substitution x = sin(theta).
double psi_by_quadrature(double t);

/// Root of psi on [1/2, 1 - 1e-12] by bisection; |psi(a)| <= tol.
/// Throws DomainError unless tol is in (0, 1e-6] and ConstructionError if
/// the bracket does not change sign.
double find_root_a(double tol = 1e-12);

/// Even, piecewise affine, u(0) = 1, u(+-a) = 0, u(+-1) = -1.
double u_fn(double a, double x);

/// u - i sqrt(1-u^2) on (-1,0], u + i sqrt(1-u^2) on (0,1).
Complex F_fn(double a, double x);

/// F as a SampledFunction with Holder metadata (1/2, K_F) and kinks {-a,0,a}.
Function F_function(double a);

/// sqrt(2)/(1-a) + 2 sqrt(2/(1-a)).
double holder_constant_F(double a);

/// int_{-1}^{1} phi/w by the N-point Gauss-Chebyshev rule.
Complex weighted_moment(const Function& phi, const QuadratureConfig& cfg);

/// g0 = -w T(F/w), backed by a shared WeightedTransform of F under cfg.
/// Carries Holder metadata (1/2, K_F) and kinks {-a, 0, a}.
Function compute_g0(double a, const QuadratureConfig& cfg);

/// Same construction with an arbitrary Holder phi in place of F.
Function minus_w_weighted(const Function& phi, const QuadratureConfig& cfg);

struct DensityCheck {
  IntervalSet set;
  double integral = 0.0;  ///< int_A |T(g0)|
  double error = 0.0;     ///< |integral - mu(A)|
};

struct RybakovData {
  double a = 0.0;
  double psi_at_a = 0.0;
  double K_F = 0.0;
  Function g0;
  Complex moment_F;                  ///< int F/w
  double max_abs_F_deviation = 0.0;  ///< sup over the grid of ||F| - 1|
  double max_g0 = 0.0;               ///< sup over the grid of |g0|
  double holder_bound_excess = 0.0;  ///< sup of w|T(F/w)| - 2 K_F (<= 0 expected)
  double max_inversion_residual = 0.0;
  double max_modulus_residual = 0.0;
  double density_error = 0.0;
  std::vector<DensityCheck> densities;
  Eigen::ArrayXd grid;
  Eigen::ArrayXd inversion_residuals;  ///< |T(g0)(t_j) - F(t_j)| per grid point
};

/// Sets {(-1,0), (0,1), (-1/2,1/2), (-1,1)}.
const std::vector<IntervalSet>& rybakov_density_sets();

/// Runs the full construction and fills every residual; never throws on a
/// large residual.
RybakovData rybakov_compute(const QuadratureConfig& cfg);

/// rybakov_compute followed by the threshold check; throws
/// VerificationFailure listing each residual above `threshold`.
RybakovData rybakov_verify(const QuadratureConfig& cfg, double threshold = 5e-3);

}  // namespace fht
