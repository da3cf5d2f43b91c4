#include "fht/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "fht/errors.hpp"

namespace fht {

std::string to_string(Scheme s) {
  return s == Scheme::chebyshev_weighted ? "chebyshev_weighted" : "subtraction_legendre";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "chebyshev_weighted") return Scheme::chebyshev_weighted;
  if (name == "subtraction_legendre") return Scheme::subtraction_legendre;
  throw ConfigError("unknown quadrature scheme '" + name + "'");
}

void QuadratureConfig::validate() const {
  if (nodes < 8) throw ConfigError("nodes must be >= 8, got " + std::to_string(nodes));
  if (grid_size < 8) {
    throw ConfigError("grid size must be >= 8, got " + std::to_string(grid_size));
  }
  if (!(clearance > 0.0 && clearance < 1e-2)) {
    throw ConfigError("clearance must lie in (0, 1e-2)");
  }
}

int QuadratureConfig::panel_order() const { return std::clamp(nodes / 256, 4, 32); }

namespace {

QuadratureRule golub_welsch(int n) {
  // Jacobi matrix of the Legendre recurrence: off-diagonal k/sqrt(4k^2-1).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  QuadratureRule rule;
  rule.nodes = eig.eigenvalues().array();
  rule.weights = 2.0 * eig.eigenvectors().row(0).transpose().array().square();

  // One Newton polish per node on P_n for full double accuracy.
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes(i);
    for (int it = 0; it < 2; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
      if (it == 1) rule.weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    rule.nodes(i) = x;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  if (order < 1) throw ConfigError("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, golub_welsch(order)).first;
  return it->second;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  const QuadratureRule& ref = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  return {mid + half * ref.nodes, half * ref.weights};
}

QuadratureRule gauss_chebyshev(int n) {
  if (n < 1) throw ConfigError("Gauss-Chebyshev needs n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights = Eigen::ArrayXd::Constant(n, std::numbers::pi / n);
  for (int k = 1; k <= n; ++k) {
    rule.nodes(k - 1) = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
  }
  return rule;
}

namespace {

void append_panel(double a, double b, int order, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  if (!(b > a)) return;
  const QuadratureRule& ref = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (Eigen::Index i = 0; i < ref.size(); ++i) {
    nodes.push_back(mid + half * ref.nodes(i));
    weights.push_back(half * ref.weights(i));
  }
}

// Panels on [end, end + dir*reach] graded toward `end`.
void append_graded_half(double end, double dir, double reach, int order,
                        const Grading& g, std::vector<double>& nodes,
                        std::vector<double>& weights) {
  // Keep panel widths far above the endpoint's ulp so no node rounds onto it.
  const double floor = 4096.0 * std::numeric_limits<double>::epsilon() * std::abs(end);
  const double closest =
      g.truncation > 0.0 ? g.truncation : std::max(g.terminal_rel * 2.0 * reach, floor);
  if (closest >= reach) {
    if (g.truncation <= 0.0) append_panel(std::min(end, end + dir * reach),
                                          std::max(end, end + dir * reach), order,
                                          nodes, weights);
    return;
  }
  const int levels =
      std::max(1, static_cast<int>(std::ceil(std::log(reach / closest) / std::log(1.0 / g.ratio))));
  const double step = std::pow(reach / closest, 1.0 / levels);
  double far = reach;
  for (int k = 0; k < levels; ++k) {
    const double near = (k == levels - 1) ? closest : far / step;
    const double a = end + dir * near;
    const double b = end + dir * far;
    append_panel(std::min(a, b), std::max(a, b), order, nodes, weights);
    far = near;
  }
  if (g.truncation <= 0.0) {
    const double b = end + dir * closest;
    append_panel(std::min(end, b), std::max(end, b), order, nodes, weights);
  }
}

}  // namespace

void append_graded(double a, double b, int order, const Grading& grading,
                   std::vector<double>& nodes, std::vector<double>& weights) {
  if (!(b > a)) return;
  const double half = 0.5 * (b - a);
  append_graded_half(a, 1.0, half, order, grading, nodes, weights);
  append_graded_half(b, -1.0, half, order, grading, nodes, weights);
}

QuadratureRule composite_rule(std::span<const double> breaks, int order,
                              const Grading& grading) {
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(breaks.size() * 64 * order);
  weights.reserve(breaks.size() * 64 * order);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    append_graded(breaks[i], breaks[i + 1], order, grading, nodes, weights);
  }
  QuadratureRule rule;
  rule.nodes = Eigen::Map<const Eigen::ArrayXd>(nodes.data(), static_cast<Eigen::Index>(nodes.size()));
  rule.weights =
      Eigen::Map<const Eigen::ArrayXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  return rule;
}

std::vector<double> make_breaks(double lo, double hi, std::span<const double> interior) {
  std::vector<double> out;
  out.reserve(interior.size() + 2);
  out.push_back(lo);
  for (double x : interior) {
    if (x > lo && x < hi) out.push_back(x);
  }
  out.push_back(hi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Eigen::ArrayXd chebyshev_grid(int m) {
  Eigen::ArrayXd grid(m);
  for (int j = 0; j < m; ++j) {
    const double t = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * m));
    grid(m - 1 - j) = std::abs(t) < 1e-15 ? 0.0 : t;
  }
  return grid;
}

}  // namespace fht
