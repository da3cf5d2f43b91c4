#include "fht/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fht/errors.hpp"
#include "fht/measure_lab.hpp"
#include "fht/transform.hpp"

namespace fht {

namespace {

constexpr double kOverflowGuard = 1e300;

Complex transform_at(const Function& f, double t, int order) {
  return f.has_transform() ? f.transform(t) : detail::principal_value(f, t, order);
}

std::vector<double> merged_breakpoints(const Function& f, const Function& g) {
  std::vector<double> all = f.breakpoints();
  const std::vector<double> more = g.breakpoints();
  all.insert(all.end(), more.begin(), more.end());
  return all;
}

void guard(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > kOverflowGuard) {
    std::ostringstream msg;
    msg << "parseval: integral " << what << " diverged";
    throw DivergenceError(msg.str());
  }
}

}  // namespace

ParsevalReport parseval(const Function& f, const Function& g, const QuadratureConfig& cfg) {
  cfg.validate();
  const int order = cfg.panel_order();
  const QuadratureRule rule =
      composite_rule(make_breaks(-1.0, 1.0, merged_breakpoints(f, g)), order);
  ParsevalReport r;
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    const double t = rule.nodes(k);
    r.f_Tg += rule.weights(k) * f(t) * transform_at(g, t, order);
    r.g_Tf += rule.weights(k) * g(t) * transform_at(f, t, order);
  }
  guard(r.f_Tg, "int f T(g)");
  guard(r.g_Tf, "int g T(f)");
  r.residual = std::abs(r.f_Tg + r.g_Tf);
  return r;
}

double parseval_residual(const Function& f, const Function& g, const QuadratureConfig& cfg) {
  return parseval(f, g, cfg).residual;
}

InversionReport inversion_check(const IntervalSet& S, const QuadratureConfig& cfg) {
  cfg.validate();
  const std::vector<double> ends = S.interior_endpoints();
  std::vector<double> xs;
  for (double x : chebyshev_grid(cfg.grid_size)) {
    if (1.0 - std::abs(x) < cfg.clearance) continue;
    if (std::any_of(ends.begin(), ends.end(),
                    [&](double e) { return std::abs(x - e) < cfg.clearance; })) {
      continue;
    }
    xs.push_back(x);
  }
  if (xs.empty()) throw ConfigError("inversion_residual: clearance leaves no grid points");

  const Function wm = m_of(S).times(weight);
  const double mu = S.measure();
  InversionReport r;
  r.points = xs.size();
  for (double x : xs) {
    const double w = weight(x);
    const Complex hat = -detail::principal_value(wm, x, cfg.panel_order()) / w;
    const double chi = S.contains(x) ? 1.0 : 0.0;
    const double res = std::abs(hat + mu / (std::numbers::pi * w) - chi);
    if (res > r.max_residual) {
      r.max_residual = res;
      r.worst_x = x;
    }
  }
  return r;
}

double inversion_residual(const IntervalSet& S, const QuadratureConfig& cfg) {
  return inversion_check(S, cfg).max_residual;
}

SimpleFunction::SimpleFunction(std::vector<IntervalSet> cells, std::vector<Complex> coeffs) {
  if (cells.size() != coeffs.size()) {
    throw DomainError("SimpleFunction: cells and coefficients differ in number");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i].intersect(cells[j]).measure() > 0.0) {
        throw DomainError("SimpleFunction: cells " + cells[i].to_string() + " and " +
                          cells[j].to_string() + " overlap");
      }
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (coeffs[i] == Complex(0.0) || cells[i].empty()) continue;
    const auto same = std::find(coeffs_.begin(), coeffs_.end(), coeffs[i]);
    if (same != coeffs_.end()) {
      IntervalSet& target = cells_[static_cast<std::size_t>(same - coeffs_.begin())];
      target = target.unite(cells[i]);
    } else {
      cells_.push_back(cells[i]);
      coeffs_.push_back(coeffs[i]);
    }
  }
}

Complex SimpleFunction::operator()(double x) const {
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    if (cells_[j].contains(x)) return coeffs_[j];
  }
  return Complex(0.0);
}

std::vector<double> SimpleFunction::endpoints() const {
  std::vector<double> all;
  for (const IntervalSet& c : cells_) {
    const std::vector<double> e = c.interior_endpoints();
    all.insert(all.end(), e.begin(), e.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

SimpleFunction SimpleFunction::scaled(Complex c) const {
  std::vector<Complex> k = coeffs_;
  for (Complex& v : k) v *= c;
  return SimpleFunction(cells_, std::move(k));
}

SimpleFunction SimpleFunction::disjoint_sum(const SimpleFunction& other) const {
  std::vector<IntervalSet> cells = cells_;
  std::vector<Complex> coeffs = coeffs_;
  cells.insert(cells.end(), other.cells_.begin(), other.cells_.end());
  coeffs.insert(coeffs.end(), other.coeffs_.begin(), other.coeffs_.end());
  return SimpleFunction(std::move(cells), std::move(coeffs));
}

Function SimpleFunction::as_function() const {
  Function f([self = *this](double x) { return self(x); });
  f.with_jumps(endpoints());
  return f;
}

Function integrate_simple(const SimpleFunction& phi) {
  std::vector<Function> parts;
  for (const IntervalSet& c : phi.cells()) parts.push_back(m_of(c));
  Function out([parts, coeffs = phi.coeffs()](double t) {
    Complex sum(0.0);
    for (std::size_t j = 0; j < parts.size(); ++j) sum += coeffs[j] * parts[j](t);
    return sum;
  });
  out.with_jumps(phi.endpoints());
  return out;
}

std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::pass: return "pass";
    case ProbeVerdict::diverged: return "diverged";
    case ProbeVerdict::not_stabilized: return "not_stabilized";
  }
  return "?";
}

ProbeReport llogl_membership_probe(const Function& f, const std::vector<Function>& witnesses,
                                   const QuadratureConfig& cfg) {
  cfg.validate();
  constexpr int max_steps = 44;
  constexpr double h0 = 1e-2;
  constexpr double stable_rel = 1e-3;
  // Below this distance from +-1 the inner principal value runs out of ulps.
  const double resolution = 4096.0 * std::numeric_limits<double>::epsilon();
  const int order = cfg.panel_order();

  ProbeReport report;
  for (const Function& g : witnesses) {
    const std::vector<double> breaks = make_breaks(-1.0, 1.0, merged_breakpoints(f, g));
    ProbeWitness pw;
    double h = h0;
    for (int step = 0; step < max_steps && h >= resolution; ++step, h *= 0.5) {
      Grading grading;
      grading.truncation = h;
      const QuadratureRule rule = composite_rule(breaks, order, grading);
      double sum = 0.0;
      for (Eigen::Index k = 0; k < rule.size(); ++k) {
        const double t = rule.nodes(k);
        sum += rule.weights(k) * std::abs(f(t) * transform_at(g, t, order));
      }
      pw.truncations.push_back(h);
      pw.integrals.push_back(sum);
      if (!std::isfinite(sum) || sum > kOverflowGuard) {
        pw.verdict = ProbeVerdict::diverged;
        break;
      }
      if (pw.integrals.size() >= 2) {
        const double prev = pw.integrals[pw.integrals.size() - 2];
        const double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
        if (std::abs(sum - prev) / scale < stable_rel) {
          pw.verdict = ProbeVerdict::pass;
          break;
        }
      }
    }
    if (pw.verdict != ProbeVerdict::pass && report.verdict == ProbeVerdict::pass) {
      report.verdict = pw.verdict;
    }
    report.witnesses.push_back(std::move(pw));
  }
  return report;
}

}  // namespace fht
