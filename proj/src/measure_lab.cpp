#include "fht/measure_lab.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "fht/errors.hpp"
#include "fht/ri_norms.hpp"
#include "fht/roots.hpp"
#include "fht/special.hpp"
#include "fht/transform.hpp"

namespace fht {

namespace {

constexpr double kMaxMatrixEntries = 1 << 24;
constexpr double kMaxFlops = 2e10;
constexpr std::size_t kSampledUnions = 2048;
constexpr int kExhaustiveCells = 8;

std::vector<double> inside(std::span<const double> pts, double lo, double hi) {
  std::vector<double> out;
  for (double x : pts) {
    if (x > lo && x < hi) out.push_back(x);
  }
  return out;
}

// Antiderivative of log(1-y) on [0,1).
double log1m_primitive(double y) { return -(1.0 - y) * std::log1p(-y) - y; }

}  // namespace

Function m_of(const IntervalSet& S) {
  if (S.empty()) return Function([](double) { return Complex(0.0); });
  Function f([S](double t) { return Complex(fht_indicator(S, t)); });
  f.with_jumps(S.interior_endpoints());
  return f;
}

double integrate_abs_power(const std::function<double(double)>& h, double lo, double hi,
                           std::span<const double> singular, double p, int order) {
  const std::vector<double> outer = make_breaks(lo, hi, inside(singular, lo, hi));
  std::vector<double> cuts(outer.begin() + 1, outer.end() - 1);
  for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
    const std::vector<double> roots = sign_changes(h, outer[i], outer[i + 1]);
    cuts.insert(cuts.end(), roots.begin(), roots.end());
  }
  const QuadratureRule rule = composite_rule(make_breaks(lo, hi, cuts), order);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    const double v = std::abs(h(rule.nodes(k)));
    sum += rule.weights(k) * (p == 1.0 ? v : std::pow(v, p));
  }
  return sum;
}

double measure_l1_norm(const IntervalSet& S, int order) {
  if (S.empty()) return 0.0;
  const std::vector<double> ends = S.interior_endpoints();
  return integrate_abs_power([&S](double t) { return fht_indicator(S, t); }, -1.0, 1.0, ends,
                             1.0, order);
}

namespace {

template <typename Reduce>
auto integrate_transform_over(const IntervalSet& S, const Function& g,
                              const QuadratureConfig& cfg, Reduce reduce) {
  cfg.validate();
  const int order = cfg.panel_order();
  const std::vector<double> bps = g.breakpoints();
  decltype(reduce(Complex{})) sum{};
  for (const Interval& piece : S.intervals()) {
    const QuadratureRule rule =
        composite_rule(make_breaks(piece.lo, piece.hi, inside(bps, piece.lo, piece.hi)), order);
    for (Eigen::Index k = 0; k < rule.size(); ++k) {
      sum += rule.weights(k) * reduce(detail::principal_value(g, rule.nodes(k), order));
    }
  }
  return sum;
}

}  // namespace

Complex scalar_measure(const IntervalSet& S, const Function& g, const QuadratureConfig& cfg) {
  return -integrate_transform_over(S, g, cfg, [](Complex v) { return v; });
}

double scalar_variation(const IntervalSet& S, const Function& g, const QuadratureConfig& cfg) {
  return integrate_transform_over(S, g, cfg, [](Complex v) { return std::abs(v); });
}

double variation_lower_bound(const IntervalSet& A, int n) {
  const double cut = static_cast<double>(n - 1) / n;
  const IntervalSet head = A.intersect(0.0, cut);
  double integral = 0.0;
  for (const Interval& piece : head.intervals()) {
    integral += log1m_primitive(piece.hi) - log1m_primitive(piece.lo);
  }
  return (integral + std::log(static_cast<double>(n)) * head.measure()) / std::numbers::pi;
}

VariationReport variation_experiment(const IntervalSet& A, int n, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n < 2) throw DomainError("variation_experiment: n must be >= 2");
  if (!A.within(0.0, 1.0)) {
    throw DomainError("variation_experiment: A = " + A.to_string() +
                      " is not contained in [0,1); apply the bound to A.reflected() for the "
                      "part in (-1,0)");
  }
  VariationReport r;
  r.n = n;
  r.cell_norms.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const IntervalSet cell = A.intersect(static_cast<double>(k - 1) / n, static_cast<double>(k) / n);
    r.cell_norms.push_back(measure_l1_norm(cell, cfg.panel_order()));
    r.total += r.cell_norms.back();
  }
  r.lower_bound = variation_lower_bound(A, n);
  r.margin = r.total - r.lower_bound;
  return r;
}

std::vector<double> EnvelopeReport::values() const {
  std::vector<double> v;
  for (const EnvelopeLevel& l : levels) v.push_back(l.l1_norm);
  return v;
}

EnvelopeReport order_envelope(const IntervalSet& A, int levels, const QuadratureConfig& cfg,
                              std::uint64_t seed) {
  cfg.validate();
  if (levels < 0 || levels > 12) throw DomainError("order_envelope: levels must lie in [0,12]");
  if (A.empty()) throw DomainError("order_envelope: A must be non-empty");
  const double lo = A.intervals().front().lo;
  const double hi = A.intervals().back().hi;
  const int finest = 1 << levels;

  std::vector<IntervalSet> cells;
  std::vector<double> cuts = A.interior_endpoints();
  for (int k = 0; k < finest; ++k) {
    const double c_lo = lo + (hi - lo) * k / finest;
    const double c_hi = (k + 1 == finest) ? hi : lo + (hi - lo) * (k + 1) / finest;
    cells.push_back(A.intersect(c_lo, c_hi));
    if (c_lo > -1.0) cuts.push_back(c_lo);
  }
  const QuadratureRule rule = composite_rule(make_breaks(-1.0, 1.0, cuts), cfg.panel_order());
  const auto n_nodes = rule.size();
  if (static_cast<double>(n_nodes) * finest > kMaxMatrixEntries) {
    std::ostringstream msg;
    msg << "order_envelope: " << n_nodes << " nodes x " << finest
        << " cells exceeds the matrix budget";
    throw BudgetError(msg.str());
  }

  // Column k holds m(cell_k) at the nodes.
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n_nodes, finest);
  for (int k = 0; k < finest; ++k) {
    if (cells[k].empty()) continue;
    for (Eigen::Index i = 0; i < n_nodes; ++i) V(i, k) = fht_indicator(cells[k], rule.nodes(i));
  }

  EnvelopeReport report;
  report.seed = seed;
  report.nodes = static_cast<std::size_t>(n_nodes);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int level = 0; level <= levels; ++level) {
    const int n_cells = 1 << level;
    const int span = finest / n_cells;
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(finest, n_cells);
    for (int k = 0; k < finest; ++k) P(k, k / span) = 1.0;
    const Eigen::MatrixXd Vl = V * P;

    const bool exhaustive = n_cells <= kExhaustiveCells;
    const std::size_t n_unions =
        exhaustive ? (std::size_t{1} << n_cells) - 1 : kSampledUnions;
    if (static_cast<double>(n_nodes) * n_cells * n_unions > kMaxFlops) {
      std::ostringstream msg;
      msg << "order_envelope: level " << level << " needs " << n_nodes << " x " << n_cells
          << " x " << n_unions << " operations";
      throw BudgetError(msg.str());
    }
    Eigen::MatrixXd U(n_cells, static_cast<Eigen::Index>(n_unions));
    for (std::size_t j = 0; j < n_unions; ++j) {
      for (int k = 0; k < n_cells; ++k) {
        U(k, static_cast<Eigen::Index>(j)) =
            exhaustive ? static_cast<double>(((j + 1) >> k) & 1u) : (coin(rng) ? 1.0 : 0.0);
      }
    }
    const Eigen::ArrayXd envelope = (Vl * U).cwiseAbs().rowwise().maxCoeff().array();
    report.levels.push_back(
        {level, n_cells, n_unions, exhaustive, (rule.weights * envelope).sum()});
  }
  return report;
}

double laeng_rhs(double measure, double p) {
  return (2.0 - std::pow(2.0, 1.0 - p)) * measure * special::zeta(p) * special::gamma(p + 1.0) /
         std::pow(std::numbers::pi, p);
}

double laeng_rhs_interval(double measure, double p) {
  return (2.0 - std::pow(2.0, 2.0 - p)) * measure * special::zeta(p) * special::gamma(p + 1.0) /
         std::pow(std::numbers::pi, p);
}

LaengReport laeng_check(const IntervalSet& A, double p, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(A.measure() > 0.0)) throw DomainError("laeng_check: mu(A) must be positive");
  if (!(p > 1.0 && p <= 8.0)) throw DomainError("laeng_check: p must lie in (1, 8]");
  LaengReport r;
  r.p = p;
  r.measure = A.measure();
  const auto h = [&A](double t) { return fht_indicator(A, t); };
  for (const Interval& piece : A.intervals()) {
    r.lhs += integrate_abs_power(h, piece.lo, piece.hi, {}, p, cfg.panel_order());
  }
  r.rhs = laeng_rhs(r.measure, p);
  r.rel_err = std::abs(r.lhs - r.rhs) / r.rhs;
  r.rhs_interval = laeng_rhs_interval(r.measure, p);
  r.rel_err_interval = std::abs(r.lhs - r.rhs_interval) / r.rhs_interval;
  return r;
}

double lexp_floor() { return 1.0 / (std::numbers::e * std::numbers::e * std::numbers::pi); }

LexpReport lexp_lower_experiment(const IntervalSet& S, const QuadratureConfig& cfg, int cells) {
  cfg.validate();
  if (!(S.measure() > 0.0)) throw DomainError("lexp_lower_experiment: mu(S) must be positive");
  LexpReport r;
  r.set = S;
  r.lexp_norm = norm_lexp(decreasing_rearrangement(m_of(S), cells));
  r.floor_value = lexp_floor();
  r.pass = r.lexp_norm > r.floor_value;
  return r;
}

}  // namespace fht
