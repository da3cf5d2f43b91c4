#pragma once

#include <vector>

#include <Eigen/Core>

#include "fht/quadrature.hpp"
#include "fht/sampled_function.hpp"

namespace fht {

/// Decreasing rearrangement f* as a right-continuous step function on
/// [0,2]: value fstar[i] on [t_grid[i], t_grid[i] + cell_width).
struct RearrangementProfile {
  Eigen::ArrayXd t_grid;
  Eigen::ArrayXd fstar;
  int source_cells = 0;

  double cell_width() const { return 2.0 / source_cells; }
  /// f*(t) for t in [0,2).
  double fstar_at(double t) const;
  /// Integral of f* over [0, t].
  double cumulative(double t) const;
  /// Integral of f* over [0,2].
  double mass() const { return fstar.sum() * cell_width(); }

 private:
  friend RearrangementProfile decreasing_rearrangement(const Function&, int);
  Eigen::ArrayXd prefix_;  // prefix_[i] = integral over [0, t_grid[i]]
};

/// Uniform cell averages of |f| (cells split at the breakpoints of f), sorted
/// in descending order. Throws DataError on a non-finite cell average.
RearrangementProfile decreasing_rearrangement(const Function& f, int cells = 1 << 14);

/// f**(t) = (1/t) int_0^t f*(s) ds, exact for the step profile, t in (0,2].
double maximal_fn(const RearrangementProfile& p, double t);

/// int_0^2 f*(t) log(2e/t) dt, exact against the step profile.
double norm_llogl(const RearrangementProfile& p);

/// sup_t f**(t)/log(2e/t) over sup_grid().
double norm_lexp(const RearrangementProfile& p);

/// sup_t f*(t)/log(2e/t) over sup_grid().
double sup_fstar_ratio(const RearrangementProfile& p);

/// 512 log-spaced points on [1e-6, 2-1e-6] plus 64 points in [1.9, 2).
const Eigen::ArrayXd& sup_grid();

/// (int |f|^p)^(1/p) on the graded composite rule split at the breakpoints
/// of f. Throws DivergenceError when the integral is non-finite or beyond
/// the overflow guard.
double norm_lp(const Function& f, double p, const QuadratureConfig& cfg);

struct LexpEquivalence {
  double R = 0.0;           ///< sup f*(t)/log(2e/t)
  double S = 0.0;           ///< sup over the p-sweep of ||f||_p / p
  double argmax_p = 1.0;    ///< p attaining S
  double R_maximal = 0.0;   ///< same sup with f** (the L_exp norm)
  bool pass = false;        ///< S/e <= R and R <= e S, relative slack 1e-6
  bool pass_maximal = false;  ///< same sandwich with R_maximal
};

/// Checks (1/e) S <= R <= e S with p in {1, 1.5, ..., pmax}.
LexpEquivalence lexp_equivalence_check(const Function& f, double pmax,
                                       const QuadratureConfig& cfg, int cells = 1 << 14);

}  // namespace fht
