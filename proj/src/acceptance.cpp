#include "fht/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "fht/identities.hpp"
#include "fht/measure_lab.hpp"
#include "fht/ri_norms.hpp"
#include "fht/rybakov.hpp"
#include "fht/special.hpp"
#include "fht/transform.hpp"

namespace fht {

namespace {

using std::numbers::e;
using std::numbers::pi;

// Tolerances.
constexpr double kArcsineTol = 1e-8;
constexpr double kOracleTol = 1e-6;
constexpr double kMomentTol = 1e-6;
constexpr double kParsevalTol = 1e-5;
constexpr double kParsevalAnalyticTol = 1e-8;
constexpr double kLloglTol = 1e-6;
constexpr double kLexpTol = 1e-3;
constexpr double kPsiHalfTol = 1e-10;
constexpr double kPsiRootTol = 1e-12;
constexpr double kModulusFTol = 1e-12;
constexpr double kMomentFTol = 1e-6;
constexpr double kRybakovTol = 5e-3;
constexpr double kHolderSlack = 1e-6;
constexpr double kVariationSlack = 1e-6;
constexpr double kEnvelopeGrowth = 1.01;
constexpr double kLaengTol = 1e-3;
constexpr double kInversionTol = 1e-3;
constexpr double kSimpleRelTol = 1e-12;

constexpr int kRybakovNodes = 4096;
constexpr int kInversionNodes = 4096;

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

class SetSampler {
 public:
  explicit SetSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// 1 to max_pieces intervals with endpoints at least `gap` apart.
  IntervalSet interval_set(int max_pieces, double gap = 1e-3) {
    const int k = integer(1, max_pieces);
    for (;;) {
      std::vector<double> pts(2 * k);
      for (double& p : pts) p = uniform(-1.0, 1.0);
      std::sort(pts.begin(), pts.end());
      bool ok = true;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && pts[i + 1] - pts[i] >= gap;
      if (ok) return IntervalSet::from_endpoints(pts);
    }
  }

  IntervalSet interval(double min_length = 1e-2) {
    for (;;) {
      double a = uniform(-1.0, 1.0);
      double b = uniform(-1.0, 1.0);
      if (a > b) std::swap(a, b);
      if (b - a >= min_length) return IntervalSet{{a, b}};
    }
  }

  /// t in (-1,1) at least `clear` from +-1 and from every point in `avoid`.
  double admissible(const std::vector<double>& avoid, double clear) {
    for (;;) {
      const double t = uniform(-1.0 + clear, 1.0 - clear);
      if (std::none_of(avoid.begin(), avoid.end(), [&](double x) { return std::abs(x - t) < clear; })) {
        return t;
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome arcsine_identity(std::uint64_t) {
  const QuadratureConfig cfg;
  const WeightedTransform<Complex> T(constant<Complex>(1.0), cfg);
  double worst = 0.0;
  for (double t : chebyshev_grid(50)) worst = std::max(worst, std::abs(T(t)));
  return {worst < kArcsineTol, fmt("max |T(1/w)| = %.3e over 50 points (tol %.0e)", worst, kArcsineTol)};
}

Outcome closed_form_oracle(std::uint64_t seed) {
  const QuadratureConfig cfg;
  SetSampler sample(seed);
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    const IntervalSet S = sample.interval_set(3);
    const Function chi = indicator<Complex>(S);
    for (int i = 0; i < 100; ++i) {
      const double t = sample.admissible(S.endpoints(), 1e-6);
      worst = std::max(worst, std::abs(fht_pv(chi, t, cfg) - fht_indicator(S, t)));
    }
  }
  return {worst < kOracleTol, fmt("max error %.3e over 10 sets x 100 points (tol %.0e)", worst, kOracleTol)};
}

Outcome weighted_moments(std::uint64_t) {
  const QuadratureConfig cfg;
  const WeightedTransform<Complex> T1(monomial<Complex>(1), cfg);
  const WeightedTransform<Complex> T2(monomial<Complex>(2), cfg);
  double e1 = 0.0;
  double e2 = 0.0;
  for (double t : chebyshev_grid(cfg.grid_size)) {
    e1 = std::max(e1, std::abs(T1(t) - 1.0));
    e2 = std::max(e2, std::abs(T2(t) - t));
  }
  return {e1 < kMomentTol && e2 < kMomentTol,
          fmt("max |T(x/w)-1| = %.3e, max |T(x^2/w)-t| = %.3e (tol %.0e)", e1, e2, kMomentTol)};
}

Outcome parseval_check(std::uint64_t seed) {
  const QuadratureConfig cfg;
  SetSampler sample(seed);
  const auto draw = [&]() -> Function {
    return sample.integer(0, 1) == 0 ? indicator<Complex>(sample.interval_set(2))
                                     : monomial<Complex>(sample.integer(0, 4));
  };
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Function f = draw();
    const Function g = draw();
    worst = std::max(worst, parseval_residual(f, g, cfg));
  }
  const ParsevalReport a = parseval(indicator<Complex>(IntervalSet{{-1.0, 0.0}}),
                                    indicator<Complex>(IntervalSet{{0.0, 1.0}}), cfg);
  const double target = 2.0 * std::log(2.0) / pi;
  const double ea = std::max(std::abs(a.f_Tg - target), std::abs(a.g_Tf + target));
  return {worst < kParsevalTol && ea < kParsevalAnalyticTol,
          fmt("max residual %.3e over 20 pairs (tol %.0e); analytic pair %.10f / %.10f, error %.3e (tol %.0e)",
              worst, kParsevalTol, a.f_Tg.real(), a.g_Tf.real(), ea, kParsevalAnalyticTol)};
}

Outcome zygmund_norms(std::uint64_t) {
  const RearrangementProfile p = decreasing_rearrangement(indicator<Complex>(IntervalSet::whole()));
  const double ll = norm_llogl(p);
  const double le = norm_lexp(p);
  return {std::abs(ll - 4.0) <= kLloglTol && std::abs(le - 1.0) <= kLexpTol,
          fmt("LlogL = %.9f (4 +- %.0e), L_exp = %.6f (1 +- %.0e)", ll, kLloglTol, le, kLexpTol)};
}

Outcome equivalence_sandwich(std::uint64_t) {
  const QuadratureConfig cfg;
  Function absx([](double x) { return Complex(std::abs(x)); });
  absx.with_kinks({0.0});
  const std::vector<std::pair<const char*, Function>> cases{
      {"chi", indicator<Complex>(IntervalSet::whole())},
      {"|x|", absx},
      {"T(chi)", m_of(IntervalSet::whole())}};
  bool all = true;
  std::ostringstream detail;
  for (const auto& [name, f] : cases) {
    const LexpEquivalence r = lexp_equivalence_check(f, 40.0, cfg);
    all = all && r.pass;
    detail << name << ": R=" << fmt("%.4f", r.R) << " S=" << fmt("%.4f", r.S) << " S/e="
           << fmt("%.4f", r.S / e) << (r.pass ? " ok" : " FAIL") << " (with f**: "
           << fmt("%.4f", r.R_maximal) << (r.pass_maximal ? " ok" : " FAIL") << "); ";
  }
  return {all, detail.str()};
}

Outcome rybakov_pipeline(std::uint64_t) {
  const QuadratureConfig cfg = QuadratureConfig{}.with_nodes(kRybakovNodes);
  const RybakovData d = rybakov_compute(cfg);
  const RybakovData coarse = rybakov_compute(cfg.with_nodes(kRybakovNodes / 2));
  const double psi_half = std::abs(psi(0.5) - (pi / 2.0 - 2.0));
  const bool ok = psi_half <= kPsiHalfTol && std::abs(d.psi_at_a) < kPsiRootTol && d.a > 0.5 &&
                  d.a < 1.0 && d.max_abs_F_deviation <= kModulusFTol &&
                  std::abs(d.moment_F) < kMomentFTol && d.max_modulus_residual < kRybakovTol &&
                  d.max_inversion_residual < kRybakovTol && d.density_error < kRybakovTol;
  const double rate = std::log2(coarse.max_inversion_residual / d.max_inversion_residual);
  return {ok, fmt("a = %.10f, |psi(a)| = %.1e, |psi(1/2)-(pi/2-2)| = %.1e, ||F|-1| = %.1e, "
                  "|int F/w| = %.2e, modulus %.3e, inversion %.3e, density %.3e (tol %.0e); "
                  "inversion at N=%d: %.3e, observed order %.2f",
                  d.a, std::abs(d.psi_at_a), psi_half, d.max_abs_F_deviation, std::abs(d.moment_F),
                  d.max_modulus_residual, d.max_inversion_residual, d.density_error, kRybakovTol,
                  kRybakovNodes / 2, coarse.max_inversion_residual, rate)};
}

Outcome holder_bound_check(std::uint64_t) {
  const QuadratureConfig cfg;
  const double a = find_root_a();
  const Function F = F_function(a);
  const Function x = monomial<Complex>(1);
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [name, phi] : {std::pair{"x", x}, std::pair{"F", F}}) {
    const WeightedTransform<Complex> T(phi, cfg);
    const double bound = holder_bound(phi.holder()->exponent, phi.holder()->constant);
    double worst = 0.0;
    for (double t : chebyshev_grid(cfg.grid_size)) worst = std::max(worst, weight(t) * std::abs(T(t)));
    ok = ok && worst <= bound + kHolderSlack;
    detail << name << ": max w|T(phi/w)| = " << fmt("%.6f", worst) << " <= " << fmt("%.6f", bound)
           << "; ";
  }
  return {ok, detail.str()};
}

Outcome variation_growth(std::uint64_t) {
  const QuadratureConfig cfg;
  const IntervalSet A{{0.0, 1.0}};
  bool ok = true;
  double prev = -1.0;
  std::ostringstream detail;
  for (int n : {4, 16, 64, 256}) {
    const VariationReport r = variation_experiment(A, n, cfg);
    const double bound = (std::log(static_cast<double>(n)) - 1.0 + 1.0 / n) / pi;
    ok = ok && r.total >= bound - kVariationSlack && r.total > prev;
    prev = r.total;
    detail << "n=" << n << ": " << fmt("%.6f", r.total) << " >= " << fmt("%.6f", bound) << "; ";
  }
  return {ok, detail.str()};
}

Outcome order_envelope_growth(std::uint64_t seed) {
  const QuadratureConfig cfg;
  const EnvelopeReport r = order_envelope(IntervalSet{{0.0, 1.0}}, 3, cfg, seed);
  const std::vector<double> v = r.values();
  const bool monotone = std::is_sorted(v.begin(), v.end());
  const bool growth = v.back() > kEnvelopeGrowth * v.front();
  return {monotone && growth, fmt("levels 0-3: %.6f %.6f %.6f %.6f (level 3 / level 0 = %.4f)", v[0], v[1],
                                  v[2], v[3], v[3] / v[0])};
}

Outcome laeng_identity(std::uint64_t seed) {
  const QuadratureConfig cfg;
  SetSampler sample(seed);
  double worst = 0.0;
  double worst_interval = 0.0;
  double worst_p2 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const IntervalSet A = sample.interval();
    for (double p : {2.0, 3.0, 4.0}) {
      const LaengReport r = laeng_check(A, p, cfg);
      worst = std::max(worst, r.rel_err);
      worst_interval = std::max(worst_interval, r.rel_err_interval);
      if (p == 2.0) worst_p2 = std::max(worst_p2, std::abs(r.lhs - r.measure / 2.0) / (r.measure / 2.0));
    }
  }
  return {worst < kLaengTol && worst_p2 < kLaengTol,
          fmt("max rel_err %.3e, p=2 lhs vs mu/2 %.3e (tol %.0e); with constant (2-2^(2-p)) the "
              "max rel_err is %.3e",
              worst, worst_p2, kLaengTol, worst_interval)};
}

Outcome lexp_floor_check(std::uint64_t) {
  const QuadratureConfig cfg;
  bool ok = true;
  std::ostringstream detail;
  for (const IntervalSet& S : {IntervalSet::whole(), IntervalSet{{0.0, 1.0}}, IntervalSet{{0.0, 0.1}},
                               IntervalSet{{0.0, 0.01}}, IntervalSet{{-0.005, 0.005}}}) {
    const LexpReport r = lexp_lower_experiment(S, cfg);
    ok = ok && r.pass;
    detail << S.to_string() << ": " << fmt("%.5f", r.lexp_norm) << "; ";
  }
  detail << "floor " << fmt("%.8f", lexp_floor());
  return {ok, detail.str()};
}

Outcome inversion_identity(std::uint64_t) {
  const QuadratureConfig cfg = QuadratureConfig{}.with_nodes(kInversionNodes);
  bool ok = true;
  std::ostringstream detail;
  for (const IntervalSet& S : {IntervalSet{{0.0, 1.0}}, IntervalSet::whole(), IntervalSet{{-0.3, 0.4}}}) {
    const double fine = inversion_residual(S, cfg);
    const double coarse = inversion_residual(S, cfg.with_nodes(kInversionNodes / 2));
    ok = ok && fine < kInversionTol && fine < coarse;
    detail << S.to_string() << ": " << fmt("%.3e", coarse) << " -> " << fmt("%.3e", fine) << "; ";
  }
  return {ok, detail.str()};
}

// T(phi)(t) = -(1/pi) sum over endpoints c of [phi(c+) - phi(c-)] log|c - t|.
Complex transform_by_jumps(const SimpleFunction& phi, double t) {
  Complex sum(0.0);
  for (std::size_t j = 0; j < phi.cells().size(); ++j) {
    for (const Interval& piece : phi.cells()[j].intervals()) {
      sum += phi.coeffs()[j] * (std::log(std::abs(piece.hi - t)) - std::log(std::abs(piece.lo - t)));
    }
  }
  return sum / pi;
}

Outcome integration_operator(std::uint64_t seed) {
  SetSampler sample(seed);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const IntervalSet support = sample.interval_set(4);
    std::vector<IntervalSet> cells;
    std::vector<Complex> coeffs;
    for (const Interval& piece : support.intervals()) {
      cells.push_back(IntervalSet{piece});
      coeffs.emplace_back(sample.uniform(-2.0, 2.0), sample.uniform(-2.0, 2.0));
    }
    const SimpleFunction phi(cells, coeffs);
    const Function Tphi = integrate_simple(phi);
    for (int k = 0; k < 50; ++k) {
      const double t = sample.admissible(support.endpoints(), 1e-9);
      const Complex oracle = transform_by_jumps(phi, t);
      worst = std::max(worst, std::abs(Tphi(t) - oracle) / std::max(1.0, std::abs(oracle)));
    }
  }
  return {worst <= kSimpleRelTol,
          fmt("max relative deviation %.3e over 20 simple functions x 50 points (tol %.0e)", worst,
              kSimpleRelTol)};
}

Outcome membership_probe(std::uint64_t) {
  const QuadratureConfig cfg;
  const Function arcsine([](double x) { return Complex(1.0 / weight(x)); });
  const Function pole([](double x) { return Complex(1.0 / (1.0 - x)); });
  const ProbeReport in = llogl_membership_probe(
      arcsine, {constant<Complex>(1.0), indicator<Complex>(IntervalSet{{0.0, 1.0}}), monomial<Complex>(1)},
      cfg);
  const ProbeReport out = llogl_membership_probe(pole, {constant<Complex>(1.0)}, cfg);
  return {in.pass() && !out.pass(),
          fmt("1/w: %s (last integral %.6f); 1/(1-x): %s after %zu steps (last integral %.3f)",
              to_string(in.verdict).c_str(), in.witnesses.front().integrals.back(),
              to_string(out.verdict).c_str(), out.witnesses.front().integrals.size(),
              out.witnesses.front().integrals.back())};
}

using Check = Outcome (*)(std::uint64_t);

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      arcsine_identity,     closed_form_oracle,   weighted_moments,      parseval_check,
      zygmund_norms,        equivalence_sandwich, rybakov_pipeline,      holder_bound_check,
      variation_growth,     order_envelope_growth, laeng_identity,       lexp_floor_check,
      inversion_identity,   integration_operator, membership_probe};
  return all;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{
      "arcsine identity",
      "closed-form oracle for indicators",
      "weighted moments",
      "Parseval identity",
      "Zygmund norms of the constant",
      "L_exp equivalence sandwich (f*, c = 1/e)",
      "Rybakov functional pipeline",
      "Holder bound on w T(phi/w)",
      "variation growth",
      "order envelope growth",
      "Laeng identity",
      "L_exp floor 1/(e^2 pi)",
      "inversion identity",
      "integration operator on simple functions",
      "LlogL membership probe"};
  return names;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= static_cast<int>(checks().size()); ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = id;
    r.name = criterion_names()[id - 1];
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = checks()[id - 1](opts.seed + static_cast<std::uint64_t>(id));
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.on_result) opts.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace fht
