#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/measure_lab.hpp"
#include "fht/ri_norms.hpp"
#include "fht/transform.hpp"
#include "generators.hpp"

using namespace fht;

namespace {

Function absx() {
  Function f([](double x) { return Complex(std::abs(x)); });
  f.with_kinks({0.0});
  return f;
}

// Random piecewise-smooth test function: a polynomial times an indicator plus a bump.
Function random_function(gen::Rng& rng) {
  const IntervalSet S = gen::interval_set(rng, 2);
  const double c0 = rng.uniform(-2.0, 2.0);
  const double c1 = rng.uniform(-2.0, 2.0);
  const double c2 = rng.uniform(-2.0, 2.0);
  Function f([=](double x) {
    return Complex((S.contains(x) ? c0 : 0.0) + c1 * x + c2 * std::cos(3.0 * x));
  });
  f.with_jumps(S.interior_endpoints());
  return f;
}

}  // namespace

TEST_CASE("rearrangement examples") {
  const RearrangementProfile one = decreasing_rearrangement(indicator<Complex>(IntervalSet::whole()), 1024);
  CHECK((one.fstar - 1.0).abs().maxCoeff() < 1e-14);

  const RearrangementProfile lin = decreasing_rearrangement(absx(), 4096);
  for (double t : {0.0, 0.3, 1.0, 1.7, 1.999}) CHECK(std::abs(lin.fstar_at(t) - (1.0 - t / 2.0)) <= 1.0 / 4096 + 1e-12);

  const RearrangementProfile level =
      decreasing_rearrangement(indicator<Complex>(IntervalSet{{-0.5, 0.25}}).scaled(3.0), 4096);
  CHECK(level.fstar_at(0.5) == doctest::Approx(3.0));
  CHECK(level.fstar_at(0.74) == doctest::Approx(3.0));
  CHECK(level.fstar_at(0.76) == doctest::Approx(0.0));
  CHECK(level.mass() == doctest::Approx(2.25));

  CHECK_THROWS_AS(decreasing_rearrangement(Function([](double) { return Complex(std::nan("")); }), 64),
                  DataError);
  CHECK_THROWS_AS(decreasing_rearrangement(absx(), 0), DomainError);
}

TEST_CASE("maximal function examples") {
  const RearrangementProfile one = decreasing_rearrangement(indicator<Complex>(IntervalSet::whole()), 256);
  for (double t : {1e-6, 0.5, 2.0}) CHECK(maximal_fn(one, t) == doctest::Approx(1.0));
  const RearrangementProfile lin = decreasing_rearrangement(absx(), 1 << 14);
  for (double t : {0.1, 1.0, 2.0}) CHECK(std::abs(maximal_fn(lin, t) - (1.0 - t / 4.0)) < 1e-4);
  const RearrangementProfile zero = decreasing_rearrangement(constant<Complex>(0.0), 64);
  CHECK(maximal_fn(zero, 1.0) == 0.0);
  CHECK_THROWS_AS(maximal_fn(one, 0.0), DomainError);
}

TEST_CASE("Zygmund norm examples") {
  const RearrangementProfile one = decreasing_rearrangement(indicator<Complex>(IntervalSet::whole()));
  CHECK(norm_llogl(one) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(norm_lexp(one) - 1.0) < 1e-3);
  const RearrangementProfile half = decreasing_rearrangement(indicator<Complex>(IntervalSet{{0.0, 1.0}}));
  CHECK(norm_llogl(half) == doctest::Approx(std::log(2.0) + 2.0).epsilon(1e-12));
  const RearrangementProfile c = decreasing_rearrangement(constant<Complex>(2.5));
  CHECK(std::abs(norm_lexp(c) - 2.5) < 2.5e-3);
  const RearrangementProfile zero = decreasing_rearrangement(constant<Complex>(0.0));
  CHECK(norm_llogl(zero) == 0.0);
  CHECK(norm_lexp(zero) == 0.0);
}

TEST_CASE("L^p norm examples") {
  const QuadratureConfig cfg;
  CHECK(norm_lp(indicator<Complex>(IntervalSet::whole()), 2.0, cfg) == doctest::Approx(std::sqrt(2.0)));
  CHECK(norm_lp(indicator<Complex>(IntervalSet{{0.0, 1.0}}), 3.0, cfg) == doctest::Approx(1.0));
  CHECK(norm_lp(absx(), 1.0, cfg) == doctest::Approx(1.0).epsilon(1e-13));
  // int |T(chi_(-1,1))| = 4 log 2 / pi.
  CHECK(norm_lp(m_of(IntervalSet::whole()), 1.0, cfg) ==
        doctest::Approx(4.0 * std::log(2.0) / std::numbers::pi).epsilon(1e-9));
  const Function blowup([](double x) { return Complex(std::exp(1.0 / (1.0 - x))); });
  CHECK_THROWS_AS(norm_lp(blowup, 1.0, cfg), DivergenceError);
  CHECK_THROWS_AS(norm_lp(absx(), 0.5, cfg), DomainError);
}

TEST_CASE("equivalence check examples") {
  const QuadratureConfig cfg;
  const LexpEquivalence one = lexp_equivalence_check(indicator<Complex>(IntervalSet::whole()), 40.0, cfg);
  CHECK(std::abs(one.R - 1.0) < 1e-3);
  CHECK(one.S == doctest::Approx(2.0));
  CHECK(one.argmax_p == 1.0);
  CHECK(one.pass);
  const LexpEquivalence zero = lexp_equivalence_check(constant<Complex>(0.0), 4.0, cfg);
  CHECK(zero.R == 0.0);
  CHECK(zero.S == 0.0);
  CHECK(zero.pass);
  CHECK_THROWS_AS(lexp_equivalence_check(absx(), 3.0, cfg), DomainError);
}

TEST_CASE("|x| sits below the f* sandwich but inside the f** one") {
  // f*(t) = 1 - t/2, so sup f*/log(2e/t) is attained inside (0,2) and falls short of S/e = 1/e.
  const QuadratureConfig cfg;
  const LexpEquivalence r = lexp_equivalence_check(absx(), 40.0, cfg);
  CHECK(r.S == doctest::Approx(1.0));
  double exact = 0.0;
  for (int i = 1; i < 200000; ++i) {
    const double t = 2.0 * i / 200000;
    exact = std::max(exact, (1.0 - t / 2.0) / std::log(2.0 * std::numbers::e / t));
  }
  CHECK(std::abs(r.R - exact) < 1e-3);
  CHECK(r.R < r.S / std::numbers::e);
  CHECK_FALSE(r.pass);
  CHECK(r.pass_maximal);
}

TEST_CASE("rearrangement properties on random functions") {
  const QuadratureConfig cfg;
  const int cells = 2048;
  gen::Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const Function f = random_function(rng);
    const RearrangementProfile p = decreasing_rearrangement(f, cells);
    for (Eigen::Index i = 1; i < p.fstar.size(); ++i) CHECK(p.fstar(i) <= p.fstar(i - 1));
    for (double t : sup_grid()) CHECK(maximal_fn(p, t) >= p.fstar_at(t) - 1e-12);

    const double maxf = p.fstar(0);
    CHECK(std::abs(p.mass() - norm_lp(f, 1.0, cfg)) < 4.0 / cells * maxf);
    CHECK(norm_lp(f, 1.0, cfg) <= norm_llogl(p) + 1e-12);

    const double c = rng.uniform(0.1, 5.0);
    const RearrangementProfile q = decreasing_rearrangement(f.scaled(c), cells);
    CHECK(norm_llogl(q) == doctest::Approx(c * norm_llogl(p)).epsilon(1e-12));
    CHECK(norm_lexp(q) == doctest::Approx(c * norm_lexp(p)).epsilon(1e-12));
    CHECK(norm_lp(f.scaled(c), 2.0, cfg) == doctest::Approx(c * norm_lp(f, 2.0, cfg)).epsilon(1e-12));

    // Lattice property: |g| <= |f| pointwise.
    const double damp = rng.uniform(0.0, 1.0);
    Function g([f, damp](double x) { return f(x) * (damp * (0.5 + 0.5 * std::cos(7.0 * x))); });
    g.with_jumps(f.jumps());
    const RearrangementProfile pg = decreasing_rearrangement(g, cells);
    CHECK(norm_llogl(pg) <= norm_llogl(p) + 1e-12);
    CHECK(norm_lexp(pg) <= norm_lexp(p) + 1e-12);
    CHECK(norm_lp(g, 3.0, cfg) <= norm_lp(f, 3.0, cfg) + 1e-12);
  }
}
