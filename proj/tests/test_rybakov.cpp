#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/rybakov.hpp"
#include "fht/special.hpp"
#include "generators.hpp"

using namespace fht;
using std::numbers::pi;

TEST_CASE("psi closed form and quadrature agree") {
  CHECK(std::abs(psi(0.5) - (pi / 2.0 - 2.0)) < 1e-14);
  CHECK(std::abs(psi(1e-9) + 1.0) < 1e-8);
  CHECK(psi(0.8) > 0.0);
  CHECK(psi(0.8) == doctest::Approx(0.0013).epsilon(0.01));
  for (int i = 1; i < 100; ++i) {
    const double t = i / 100.0;
    CHECK(std::abs(psi(t) - psi_by_quadrature(t)) < 1e-10);
  }
  CHECK_THROWS_AS(psi(0.0), DomainError);
  CHECK_THROWS_AS(psi(1.0), DomainError);
  CHECK_THROWS_AS(psi_by_quadrature(-0.1), DomainError);
}

TEST_CASE("psi is strictly increasing") {
  double prev = psi(0.005);
  for (int i = 1; i < 100; ++i) {
    const double t = 0.005 + i * 0.0099;
    const double v = psi(t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("root of psi") {
  const double a = find_root_a(1e-12);
  CHECK(std::abs(psi(a)) <= 1e-12);
  CHECK(a > 0.5);
  CHECK(a < 1.0);
  // Independent bisection on the quadrature form of psi.
  double lo = 0.5;
  double hi = 0.99;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (psi_by_quadrature(mid) < 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(a - 0.5 * (lo + hi)) < 1e-10);
  CHECK(a < 0.8);
  CHECK(std::abs(psi(find_root_a(1e-7))) <= 1e-7);
  CHECK_THROWS_AS(find_root_a(0.0), DomainError);
  CHECK_THROWS_AS(find_root_a(1e-3), DomainError);
}

TEST_CASE("u is even, piecewise affine and Lipschitz") {
  const double a = find_root_a();
  CHECK(u_fn(a, 0.0) == 1.0);
  CHECK(u_fn(a, -1.0) == -1.0);
  CHECK(u_fn(a, 1.0) == -1.0);
  CHECK(std::abs(u_fn(a, a)) < 1e-15);
  CHECK(std::abs(u_fn(a, -a)) < 1e-15);
  gen::Rng rng(31);
  const double K = 1.0 / (1.0 - a);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    const double t = rng.uniform(-1.0, 1.0);
    CHECK(u_fn(a, x) == u_fn(a, -x));
    CHECK(std::abs(u_fn(a, x) - u_fn(a, t)) <= K * std::abs(x - t) * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("F is unimodular and 1/2-Holder") {
  const double a = find_root_a();
  CHECK(std::abs(F_fn(a, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(F_fn(a, 1.0) + 1.0) < 1e-15);
  CHECK(std::abs(F_fn(a, -1.0) + 1.0) < 1e-15);
  const double KF = holder_constant_F(a);
  CHECK(KF == doctest::Approx(std::sqrt(2.0) / (1.0 - a) + 2.0 * std::sqrt(2.0 / (1.0 - a))));
  gen::Rng rng(32);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    CHECK(std::abs(std::abs(F_fn(a, x)) - 1.0) < 1e-12);
  }
  CHECK(holder_excess(F_function(a), 10000, 33) <= 1e-12);
  // sqrt(1-u^2) on its own is 1/2-Holder with constant 2 sqrt(2/(1-a)).
  RealFunction G([a](double x) { return F_fn(a, x).imag(); });
  G.with_holder(0.5, 2.0 * std::sqrt(2.0 / (1.0 - a)));
  CHECK(holder_excess(G, 10000, 34) <= 1e-12);
}

TEST_CASE("weighted moments") {
  const QuadratureConfig cfg;
  const double a = find_root_a();
  CHECK(std::abs(weighted_moment(F_function(a), cfg)) < 1e-6);
  CHECK(std::abs(weighted_moment(constant<Complex>(1.0), cfg) - pi) < 1e-13);
  CHECK(std::abs(weighted_moment(monomial<Complex>(3), cfg)) < 1e-14);
  // Real part is 2 psi(a) exactly; converges as N grows.
  const double coarse = std::abs(weighted_moment(F_function(a), cfg.with_nodes(512)));
  const double fine = std::abs(weighted_moment(F_function(a), cfg.with_nodes(4096)));
  CHECK(fine < coarse);
}

TEST_CASE("g0 construction") {
  QuadratureConfig cfg;
  cfg.nodes = 1024;
  const double a = find_root_a();
  const Function g0 = compute_g0(a, cfg);
  REQUIRE(g0.holder().has_value());
  CHECK(g0.holder()->exponent == 0.5);
  CHECK(g0.kinks().size() == 3);
  const double bound = 2.0 * holder_constant_F(a);
  for (double t : chebyshev_grid(101)) {
    const Complex v = g0(t);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
    CHECK(std::abs(v) <= bound);
  }
  const Function zero = minus_w_weighted(constant<Complex>(1.0), cfg);
  for (double t : chebyshev_grid(31)) CHECK(std::abs(zero(t)) < 1e-12);
}

TEST_CASE("rybakov pipeline at reduced size converges under doubling") {
  QuadratureConfig cfg;
  cfg.grid_size = 41;
  cfg.nodes = 512;
  const RybakovData coarse = rybakov_compute(cfg);
  const RybakovData fine = rybakov_compute(cfg.with_nodes(1024));
  CHECK(fine.a > 0.5);
  CHECK(fine.a < 1.0);
  CHECK(std::abs(fine.psi_at_a) <= 1e-12);
  CHECK(fine.max_inversion_residual < 5e-3);
  CHECK(fine.max_modulus_residual < 5e-3);
  CHECK(fine.density_error < 5e-3);
  CHECK(fine.max_inversion_residual < coarse.max_inversion_residual);
  CHECK(fine.holder_bound_excess <= 0.0);
  CHECK(fine.densities.size() == 4);
  CHECK(fine.max_modulus_residual <= fine.max_inversion_residual + 1e-15);
  for (double r : fine.inversion_residuals) CHECK(r >= 0.0);
  CHECK_THROWS_AS(rybakov_verify(cfg, 1e-12), VerificationFailure);
}
