#include "fht/rybakov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fht/errors.hpp"
#include "fht/special.hpp"

namespace fht {

namespace {

void require_unit(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) {
    std::ostringstream msg;
    msg << what << ": t = " << t << " is outside (0,1)";
    throw DomainError(msg.str());
  }
}

// int_lo^hi g(x)/sqrt(1-x^2) dx with x = sin(theta), 0 <= lo < hi <= 1.
template <typename G>
double arcsine_integral(G g, double lo, double hi) {
  const QuadratureRule rule = gauss_legendre(64, std::asin(lo), std::asin(hi));
  double sum = 0.0;
  for (Eigen::Index k = 0; k < rule.size(); ++k) sum += rule.weights(k) * g(std::sin(rule.nodes(k)));
  return sum;
}

}  // namespace

double psi(double t) {
  require_unit(t, "psi");
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  return std::asin(t) + (s - 1.0) / t + (t * std::acos(t) - s) / (1.0 - t);
}

double psi_by_quadrature(double t) {
  require_unit(t, "psi_by_quadrature");
  const double left = arcsine_integral([t](double x) { return 1.0 - x / t; }, 0.0, t);
  const double right = arcsine_integral([t](double x) { return (t - x) / (1.0 - t); }, t, 1.0);
  return left + right;
}

double find_root_a(double tol) {
  if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError("find_root_a: tol must lie in (0, 1e-6]");
  double lo = 0.5;
  double hi = 1.0 - 1e-12;
  if (!(psi(lo) < 0.0 && psi(hi) > 0.0)) {
    throw ConstructionError("find_root_a: psi does not change sign on [1/2, 1-1e-12]");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double v = psi(mid);
    if (std::abs(v) <= tol || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon()) break;
    (v < 0.0 ? lo : hi) = mid;
  }
  if (std::abs(psi(mid)) > tol) {
    std::ostringstream msg;
    msg << "find_root_a: bracket collapsed with |psi| = " << std::abs(psi(mid)) << " > " << tol;
    throw ConstructionError(msg.str());
  }
  return mid;
}

double u_fn(double a, double x) {
  const double y = std::abs(x);
  if (y >= 1.0) return -1.0;
  return y <= a ? (a - y) / a : (a - y) / (1.0 - a);
}

Complex F_fn(double a, double x) {
  const double u = u_fn(a, x);
  const double im = std::sqrt(std::max(0.0, (1.0 - u) * (1.0 + u)));
  return {u, x <= 0.0 ? -im : im};
}

double holder_constant_F(double a) {
  return std::sqrt(2.0) / (1.0 - a) + 2.0 * std::sqrt(2.0 / (1.0 - a));
}

Function F_function(double a) {
  Function F([a](double x) { return F_fn(a, x); });
  F.with_holder(0.5, holder_constant_F(a)).with_kinks({-a, 0.0, a});
  return F;
}

Complex weighted_moment(const Function& phi, const QuadratureConfig& cfg) {
  cfg.validate();
  const QuadratureRule rule = gauss_chebyshev(cfg.nodes);
  Complex sum(0.0);
  for (Eigen::Index k = 0; k < rule.size(); ++k) sum += rule.weights(k) * phi(rule.nodes(k));
  return sum;
}

Function minus_w_weighted(const Function& phi, const QuadratureConfig& cfg) {
  auto wt = std::make_shared<const WeightedTransform<Complex>>(phi, cfg);
  Function g([wt](double t) { return -weight(t) * (*wt)(t); });
  g.with_kinks(phi.breakpoints());
  if (phi.holder()) g.with_holder(phi.holder()->exponent, phi.holder()->constant);
  return g;
}

Function compute_g0(double a, const QuadratureConfig& cfg) {
  return minus_w_weighted(F_function(a), cfg);
}

const std::vector<IntervalSet>& rybakov_density_sets() {
  static const std::vector<IntervalSet> sets{
      IntervalSet{{-1.0, 0.0}}, IntervalSet{{0.0, 1.0}}, IntervalSet{{-0.5, 0.5}},
      IntervalSet::whole()};
  return sets;
}

RybakovData rybakov_compute(const QuadratureConfig& cfg) {
  cfg.validate();
  RybakovData d;
  d.a = find_root_a(1e-12);
  d.psi_at_a = psi(d.a);
  d.K_F = holder_constant_F(d.a);
  const Function F = F_function(d.a);
  d.moment_F = weighted_moment(F, cfg);
  d.g0 = compute_g0(d.a, cfg);

  const Eigen::ArrayXd full = chebyshev_grid(cfg.grid_size);
  std::vector<double> kept;
  for (double t : full) {
    if (1.0 - std::abs(t) >= cfg.clearance) kept.push_back(t);
  }
  d.grid = Eigen::Map<const Eigen::ArrayXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
  d.inversion_residuals.resize(d.grid.size());
  const double bound = holder_bound(0.5, d.K_F);
  d.holder_bound_excess = -bound;
  for (Eigen::Index j = 0; j < d.grid.size(); ++j) {
    const double t = d.grid(j);
    const Complex Ft = F(t);
    const Complex g0t = d.g0(t);
    const Complex Tg0 = fht_pv(d.g0, t, cfg);
    d.max_abs_F_deviation = std::max(d.max_abs_F_deviation, std::abs(std::abs(Ft) - 1.0));
    d.max_g0 = std::max(d.max_g0, std::abs(g0t));
    d.holder_bound_excess = std::max(d.holder_bound_excess, std::abs(g0t) - bound);
    d.inversion_residuals(j) = std::abs(Tg0 - Ft);
    d.max_inversion_residual = std::max(d.max_inversion_residual, d.inversion_residuals(j));
    d.max_modulus_residual = std::max(d.max_modulus_residual, std::abs(std::abs(Tg0) - 1.0));
  }

  const std::vector<double> cuts{-1.0, -d.a, -0.5, 0.0, 0.5, d.a, 1.0};
  for (const IntervalSet& A : rybakov_density_sets()) {
    DensityCheck check{A, 0.0, 0.0};
    for (const Interval& piece : A.intervals()) {
      std::vector<double> inner;
      for (double c : cuts) {
        if (c > piece.lo && c < piece.hi) inner.push_back(c);
      }
      const std::vector<double> breaks = make_breaks(piece.lo, piece.hi, inner);
      for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const QuadratureRule rule = gauss_legendre(24, breaks[i], breaks[i + 1]);
        for (Eigen::Index k = 0; k < rule.size(); ++k) {
          check.integral += rule.weights(k) * std::abs(fht_pv(d.g0, rule.nodes(k), cfg));
        }
      }
    }
    check.error = std::abs(check.integral - A.measure());
    d.density_error = std::max(d.density_error, check.error);
    d.densities.push_back(check);
  }
  return d;
}

RybakovData rybakov_verify(const QuadratureConfig& cfg, double threshold) {
  RybakovData d = rybakov_compute(cfg);
  std::ostringstream failures;
  const auto check = [&](const char* name, double value) {
    if (!(value <= threshold)) failures << ' ' << name << '=' << value;
  };
  check("max_inversion_residual", d.max_inversion_residual);
  check("max_modulus_residual", d.max_modulus_residual);
  check("density_error", d.density_error);
  if (!failures.str().empty()) {
    throw VerificationFailure("rybakov_verify: residuals above " + std::to_string(threshold) +
                              ":" + failures.str());
  }
  return d;
}

}  // namespace fht
