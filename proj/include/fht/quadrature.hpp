#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fht {

enum class Scheme { chebyshev_weighted, subtraction_legendre };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

/// Node count N, evaluation grid size M, clearance delta and weighted scheme.
struct QuadratureConfig {
  int nodes = 2048;
  int grid_size = 201;
  double clearance = 1e-6;
  Scheme scheme = Scheme::chebyshev_weighted;

  /// Throws ConfigError unless N >= 8, M >= 8 and 0 < delta < 1e-2.
  void validate() const;
  /// Gauss-Legendre order used on each composite panel.
  int panel_order() const;
  QuadratureConfig with_nodes(int n) const {
    QuadratureConfig c = *this;
    c.nodes = n;
    return c;
  }
};

/// Nodes and weights of a quadrature rule.
struct QuadratureRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;

  Eigen::Index size() const { return nodes.size(); }
  /// Sum of weights[i] * values[i].
  template <typename Derived>
  auto apply(const Eigen::ArrayBase<Derived>& values) const {
    return (weights.template cast<typename Derived::Scalar>() * values).sum();
  }
};

/// Gauss-Legendre rule of the given order on [-1,1] (Golub-Welsch).
/// Cached; safe to call concurrently.
const QuadratureRule& gauss_legendre(int order);

/// Gauss-Legendre rule mapped to [a,b].
QuadratureRule gauss_legendre(int order, double a, double b);

/// Gauss-Chebyshev nodes cos((2k-1)pi/(2N)), k = 1..N, each with weight pi/N;
/// integrates phi(x)/sqrt(1-x^2) over (-1,1).
QuadratureRule gauss_chebyshev(int n);

struct Grading {
  /// Ratio between consecutive panel distances toward a graded end.
  double ratio = 0.25;
  /// Closest distance reached, relative to the subinterval length.
  double terminal_rel = 1e-14;
  /// Absolute truncation distance; when > 0 the region closer than this to
  /// every breakpoint is excluded instead of covered by a terminal panel.
  double truncation = 0.0;
};

/// Composite Gauss-Legendre rule on [breaks.front(), breaks.back()]. Each
/// subinterval between consecutive breakpoints is halved and each half is
/// geometrically graded toward its breakpoint, so algebraic and logarithmic
/// endpoint singularities are resolved. `breaks` must be sorted.
QuadratureRule composite_rule(std::span<const double> breaks, int order,
                              const Grading& grading = {});

/// Appends a graded rule on [a,b] to `nodes`/`weights`.
void append_graded(double a, double b, int order, const Grading& grading,
                   std::vector<double>& nodes, std::vector<double>& weights);

/// Sorted, de-duplicated breakpoint list { lo, interior points, hi }.
std::vector<double> make_breaks(double lo, double hi, std::span<const double> interior);

/// Chebyshev evaluation grid t_j = cos((2j+1)pi/(2M)), returned ascending.
Eigen::ArrayXd chebyshev_grid(int m);

}  // namespace fht
