#include "fht/ri_norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "fht/errors.hpp"
#include "fht/roots.hpp"

namespace fht {

namespace {

constexpr double kOverflowGuard = 1e300;

// Antiderivative of log(2e/t), zero at t = 0.
double log_weight_primitive(double t) {
  return t > 0.0 ? t * std::log(2.0 * std::numbers::e / t) + t : 0.0;
}

double log_weight(double t) { return std::log(2.0 * std::numbers::e / t); }

}  // namespace

double RearrangementProfile::fstar_at(double t) const {
  if (t < 0.0 || source_cells == 0) return 0.0;
  const auto i = static_cast<Eigen::Index>(std::floor(t / cell_width()));
  return i < fstar.size() ? fstar(i) : 0.0;
}

double RearrangementProfile::cumulative(double t) const {
  if (t <= 0.0 || source_cells == 0) return 0.0;
  const double h = cell_width();
  auto i = static_cast<Eigen::Index>(std::floor(t / h));
  if (i >= fstar.size()) return mass();
  return prefix_(i) + fstar(i) * (t - i * h);
}

RearrangementProfile decreasing_rearrangement(const Function& f, int cells) {
  if (cells < 1) throw DomainError("decreasing_rearrangement: cells must be positive");
  const double h = 2.0 / cells;
  const std::vector<double> bps = f.breakpoints();
  const QuadratureRule& ref = gauss_legendre(8);

  Eigen::ArrayXd averages(cells);
  for (int c = 0; c < cells; ++c) {
    const double lo = -1.0 + c * h;
    const double hi = (c + 1 == cells) ? 1.0 : lo + h;
    const auto first = std::upper_bound(bps.begin(), bps.end(), lo);
    const auto last = std::lower_bound(bps.begin(), bps.end(), hi);
    std::vector<double> cuts{lo};
    cuts.insert(cuts.end(), first, last);
    cuts.push_back(hi);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double half = 0.5 * (cuts[k + 1] - cuts[k]);
      const double mid = 0.5 * (cuts[k + 1] + cuts[k]);
      for (Eigen::Index j = 0; j < ref.size(); ++j) {
        sum += half * ref.weights(j) * std::abs(f(mid + half * ref.nodes(j)));
      }
    }
    const double avg = sum / (hi - lo);
    if (!std::isfinite(avg)) {
      std::ostringstream msg;
      msg << "decreasing_rearrangement: non-finite average in cell " << c << " [" << lo
          << ", " << hi << ")";
      throw DataError(msg.str());
    }
    averages(c) = avg;
  }
  std::vector<double> sorted(averages.begin(), averages.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());

  RearrangementProfile p;
  p.source_cells = cells;
  p.fstar = Eigen::Map<Eigen::ArrayXd>(sorted.data(), cells);
  p.t_grid = Eigen::ArrayXd::LinSpaced(cells, 0.0, h * (cells - 1));
  p.prefix_.resize(cells);
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    p.prefix_(i) = acc;
    acc += p.fstar(i) * h;
  }
  return p;
}

double maximal_fn(const RearrangementProfile& p, double t) {
  if (!(t > 0.0)) throw DomainError("maximal_fn: t must be positive");
  return p.cumulative(t) / t;
}

double norm_llogl(const RearrangementProfile& p) {
  const double h = p.cell_width();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.fstar.size(); ++i) {
    sum += p.fstar(i) * (log_weight_primitive((i + 1) * h) - log_weight_primitive(i * h));
  }
  return sum;
}

const Eigen::ArrayXd& sup_grid() {
  static const Eigen::ArrayXd grid = [] {
    constexpr int n_log = 512;
    constexpr int n_top = 64;
    Eigen::ArrayXd g(n_log + n_top);
    const double lo = std::log(1e-6);
    const double hi = std::log(2.0 - 1e-6);
    for (int i = 0; i < n_log; ++i) g(i) = std::exp(lo + (hi - lo) * i / (n_log - 1));
    for (int i = 0; i < n_top; ++i) g(n_log + i) = 1.9 + (0.1 - 1e-6) * i / (n_top - 1);
    std::sort(g.begin(), g.end());
    return g;
  }();
  return grid;
}

double norm_lexp(const RearrangementProfile& p) {
  double best = 0.0;
  for (double t : sup_grid()) best = std::max(best, maximal_fn(p, t) / log_weight(t));
  return best;
}

double sup_fstar_ratio(const RearrangementProfile& p) {
  double best = 0.0;
  for (double t : sup_grid()) best = std::max(best, p.fstar_at(t) / log_weight(t));
  return best;
}

double norm_lp(const Function& f, double p, const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw DomainError("norm_lp: p must be >= 1");
  cfg.validate();
  // |f| has a kink wherever f vanishes, so zeros of either component become breakpoints too.
  const std::vector<double> outer = make_breaks(-1.0, 1.0, f.breakpoints());
  std::vector<double> cuts(outer.begin() + 1, outer.end() - 1);
  for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
    for (const auto& part : {std::function<double(double)>([&f](double x) { return f(x).real(); }),
                             std::function<double(double)>([&f](double x) { return f(x).imag(); })}) {
      const std::vector<double> roots = sign_changes(part, outer[i], outer[i + 1]);
      cuts.insert(cuts.end(), roots.begin(), roots.end());
    }
  }
  const QuadratureRule rule = composite_rule(make_breaks(-1.0, 1.0, cuts), cfg.panel_order());
  double sum = 0.0;
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    sum += rule.weights(k) * std::pow(std::abs(f(rule.nodes(k))), p);
  }
  if (!std::isfinite(sum) || sum > kOverflowGuard) {
    std::ostringstream msg;
    msg << "norm_lp: integral of |f|^" << p << " diverged (value " << sum << ")";
    throw DivergenceError(msg.str());
  }
  return std::pow(sum, 1.0 / p);
}

LexpEquivalence lexp_equivalence_check(const Function& f, double pmax,
                                       const QuadratureConfig& cfg, int cells) {
  if (!(pmax >= 4.0)) throw DomainError("lexp_equivalence_check: pmax must be >= 4");
  const RearrangementProfile profile = decreasing_rearrangement(f, cells);
  LexpEquivalence out;
  out.R = sup_fstar_ratio(profile);
  out.R_maximal = norm_lexp(profile);
  for (int k = 0;; ++k) {
    const double p = 1.0 + 0.5 * k;
    if (p > pmax + 1e-12) break;
    const double ratio = norm_lp(f, p, cfg) / p;
    if (ratio > out.S) {
      out.S = ratio;
      out.argmax_p = p;
    }
  }
  constexpr double slack = 1.0 + 1e-6;
  const auto sandwich = [&](double r) {
    return out.S / std::numbers::e <= r * slack && r <= std::numbers::e * out.S * slack;
  };
  out.pass = sandwich(out.R);
  out.pass_maximal = sandwich(out.R_maximal);
  return out;
}

}  // namespace fht
