#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/identities.hpp"
#include "fht/measure_lab.hpp"
#include "fht/transform.hpp"
#include "generators.hpp"

using namespace fht;
using std::numbers::pi;

namespace {

double log_primitive(double t, double c) {
  const double d = t - c;
  return d == 0.0 ? -t : d * std::log(std::abs(d)) - t;
}

// int_{-1}^{1} T(chi_(a,b)).
double integral_of_indicator_transform(double a, double b) {
  const auto F = [&](double t) { return log_primitive(t, b) - log_primitive(t, a); };
  return (F(1.0) - F(-1.0)) / pi;
}

// int_a^b T(1).
double integral_of_one_transform(double a, double b) {
  const auto F = [](double t) { return log_primitive(t, 1.0) - log_primitive(t, -1.0); };
  return (F(b) - F(a)) / pi;
}

}  // namespace

TEST_CASE("Parseval against closed forms") {
  const QuadratureConfig cfg;
  const ParsevalReport r = parseval(constant<Complex>(1.0), indicator<Complex>(IntervalSet{{0.0, 1.0}}), cfg);
  CHECK(std::abs(r.f_Tg.real() - 2.0 * std::log(2.0) / pi) < 1e-8);
  CHECK(std::abs(r.g_Tf.real() + 2.0 * std::log(2.0) / pi) < 1e-8);
  CHECK(r.residual < 1e-8);

  gen::Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    const IntervalSet A = gen::interval(rng);
    const Interval I = A.intervals().front();
    const ParsevalReport p = parseval(constant<Complex>(1.0), indicator<Complex>(A), cfg);
    CHECK(std::abs(p.f_Tg.real() - integral_of_indicator_transform(I.lo, I.hi)) < 1e-8);
    CHECK(std::abs(p.g_Tf.real() - integral_of_one_transform(I.lo, I.hi)) < 1e-8);
    CHECK(std::abs(p.f_Tg.imag()) == 0.0);
  }
}

TEST_CASE("Parseval residual is small and antisymmetric on random pairs") {
  const QuadratureConfig cfg;
  gen::Rng rng(52);
  for (int i = 0; i < 10; ++i) {
    const Function f = indicator<Complex>(gen::interval_set(rng, 3, 1e-2));
    const Function g = rng.integer(0, 1) ? indicator<Complex>(gen::interval_set(rng, 3, 1e-2))
                                         : monomial<Complex>(rng.integer(0, 4));
    const ParsevalReport fg = parseval(f, g, cfg);
    const ParsevalReport gf = parseval(g, f, cfg);
    CHECK(fg.residual < 1e-7);
    CHECK(std::abs(fg.f_Tg - gf.g_Tf) < 1e-12);
    CHECK(parseval_residual(f, g, cfg) == fg.residual);
  }
  // Odd against even: both sides vanish.
  const ParsevalReport odd = parseval(monomial<Complex>(1), monomial<Complex>(2), cfg);
  CHECK(odd.residual < 1e-8);
}

TEST_CASE("Parseval divergence is reported") {
  QuadratureConfig cfg;
  Function blow([](double x) { return Complex(std::exp(1.0 / (1.0 - x))); });
  CHECK_THROWS_AS(parseval(blow, constant<Complex>(1.0), cfg), DivergenceError);
}

TEST_CASE("inversion residuals") {
  QuadratureConfig cfg;
  cfg.nodes = 4096;
  CHECK(inversion_residual(IntervalSet{}, cfg) < 1e-12);
  for (const IntervalSet& S : {IntervalSet{{0.0, 1.0}}, IntervalSet{{-1.0, 1.0}}, IntervalSet{{-0.3, 0.4}}}) {
    const InversionReport r = inversion_check(S, cfg);
    CHECK(r.max_residual < 1e-10);
    CHECK(r.points > 150);
  }
  const double coarse = inversion_residual(IntervalSet{{-0.3, 0.4}}, cfg.with_nodes(1024));
  const double fine = inversion_residual(IntervalSet{{-0.3, 0.4}}, cfg.with_nodes(2048));
  CHECK(fine < coarse);

  QuadratureConfig tiny;
  tiny.grid_size = 8;
  const Eigen::ArrayXd xs = chebyshev_grid(8);
  std::vector<double> flat(xs.begin(), xs.end());
  std::sort(flat.begin(), flat.end());
  CHECK_THROWS_AS(inversion_check(IntervalSet::from_endpoints(flat), tiny), ConfigError);
}

TEST_CASE("SimpleFunction canonical form") {
  const SimpleFunction phi({IntervalSet{{-0.5, 0.0}}, IntervalSet{{0.2, 0.4}}, IntervalSet{{0.6, 0.7}},
                            IntervalSet{}},
                           {Complex(2.0), Complex(0.0), Complex(2.0), Complex(5.0)});
  REQUIRE(phi.cells().size() == 1);
  CHECK(phi.coeffs()[0] == Complex(2.0));
  CHECK(phi.cells()[0] == (IntervalSet{{-0.5, 0.0}, {0.6, 0.7}}));
  CHECK(phi(-0.25) == Complex(2.0));
  CHECK(phi(0.3) == Complex(0.0));
  CHECK(phi.endpoints() == std::vector<double>{-0.5, 0.0, 0.6, 0.7});
  CHECK(phi.scaled(0.0).is_zero());
  CHECK(SimpleFunction().is_zero());

  CHECK_THROWS_AS(SimpleFunction({IntervalSet{{0.0, 0.5}}, IntervalSet{{0.4, 0.6}}}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(SimpleFunction({IntervalSet{{0.0, 0.5}}}, {1.0, 2.0}), DomainError);

  const SimpleFunction psi({IntervalSet{{0.8, 0.9}}}, {Complex(0.0, 1.0)});
  const SimpleFunction sum = phi.disjoint_sum(psi);
  CHECK(sum.cells().size() == 2);
  CHECK(sum(0.85) == Complex(0.0, 1.0));
  CHECK_THROWS_AS(phi.disjoint_sum(phi), DomainError);

  const Function f = sum.as_function();
  CHECK(f(0.65) == Complex(2.0));
  CHECK(f.jumps().size() == 6);
}

TEST_CASE("integrate_simple") {
  const SimpleFunction one({IntervalSet::whole()}, {Complex(1.0)});
  CHECK(std::abs(integrate_simple(one)(0.3) - m_of(IntervalSet::whole())(0.3)) < 1e-15);
  CHECK(integrate_simple(SimpleFunction())(0.1) == Complex(0.0));

  const QuadratureConfig cfg;
  gen::Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const IntervalSet A = gen::interval_set(rng, 2, 1e-2).intersect(-1.0, 0.0);
    const IntervalSet B = gen::interval_set(rng, 2, 1e-2).intersect(0.0, 1.0);
    const Complex a(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const Complex b(rng.uniform(-2.0, 2.0), 0.0);
    const SimpleFunction phi({A, B}, {a, b});
    std::vector<double> avoid = phi.endpoints();
    avoid.push_back(0.0);
    const double t = gen::admissible(rng, avoid, 1e-3);
    const Complex closed = integrate_simple(phi)(t);
    CHECK(std::abs(closed - (a * m_of(A)(t) + b * m_of(B)(t))) < 1e-12 * (1.0 + std::abs(closed)));
    // Same value by quadrature of the principal value.
    const Complex pv = fht_pv(phi.as_function(), t, cfg);
    CHECK(std::abs(closed - pv) < 1e-8 * (1.0 + std::abs(closed)));
    const Complex doubled = integrate_simple(phi.scaled(2.0))(t);
    CHECK(std::abs(doubled - 2.0 * closed) < 1e-12 * (1.0 + std::abs(closed)));
  }
}

TEST_CASE("LlogL membership probe") {
  const QuadratureConfig cfg;
  CHECK(to_string(ProbeVerdict::pass) == "pass");
  CHECK(to_string(ProbeVerdict::diverged) == "diverged");
  CHECK(to_string(ProbeVerdict::not_stabilized) == "not_stabilized");

  const Function arcsine([](double x) { return Complex(1.0 / weight(x)); });
  const std::vector<Function> witnesses{constant<Complex>(1.0), indicator<Complex>(IntervalSet{{0.0, 1.0}}),
                                        monomial<Complex>(1)};
  const ProbeReport good = llogl_membership_probe(arcsine, witnesses, cfg);
  CHECK(good.pass());
  REQUIRE(good.witnesses.size() == 3);
  for (const ProbeWitness& w : good.witnesses) {
    CHECK(w.verdict == ProbeVerdict::pass);
    CHECK(w.truncations.size() == w.integrals.size());
    CHECK(w.truncations.front() == 1e-2);
  }

  const Function pole([](double x) { return Complex(1.0 / (1.0 - x)); });
  const ProbeReport bad = llogl_membership_probe(pole, {constant<Complex>(1.0)}, cfg);
  CHECK_FALSE(bad.pass());
  CHECK(bad.verdict != ProbeVerdict::pass);
  const ProbeWitness& w = bad.witnesses.front();
  for (std::size_t i = 1; i < w.integrals.size(); ++i) CHECK(w.integrals[i] > w.integrals[i - 1]);

  const ProbeReport bounded = llogl_membership_probe(monomial<Complex>(2), witnesses, cfg);
  CHECK(bounded.pass());
}
