#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fht/interval_set.hpp"
#include "fht/quadrature.hpp"
#include "fht/sampled_function.hpp"

namespace fht {

/// m(S) = T(chi_S) in closed form, with jumps at the endpoints of S.
Function m_of(const IntervalSet& S);

/// int_lo^hi |h|^p for a real h that is smooth between `singular` points
/// (where it may blow up integrably). Splits at the sign changes of h as
/// well as at the singular points and uses the graded composite rule.
double integrate_abs_power(const std::function<double(double)>& h, double lo, double hi,
                           std::span<const double> singular, double p, int order);

/// ||m(S)||_{L1} = int_{-1}^{1} |T(chi_S)|.
double measure_l1_norm(const IntervalSet& S, int order);

/// -int_S T(g), with T(g) by singularity-subtraction quadrature.
Complex scalar_measure(const IntervalSet& S, const Function& g, const QuadratureConfig& cfg);

/// int_S |T(g)|, the variation of the scalar measure <m, g> on S.
double scalar_variation(const IntervalSet& S, const Function& g, const QuadratureConfig& cfg);

struct VariationReport {
  int n = 0;
  std::vector<double> cell_norms;
  double total = 0.0;
  double lower_bound = 0.0;
  double margin = 0.0;
};

/// Cells A_k(n) = A n [(k-1)/n, k/n), k = 1..n. Throws DomainError unless
/// A lies in [0,1).
VariationReport variation_experiment(const IntervalSet& A, int n, const QuadratureConfig& cfg);

/// (1/pi) int_{A n [0,(n-1)/n)} log(1-y) dy + (1/pi) log(n) mu(A n [0,(n-1)/n)).
double variation_lower_bound(const IntervalSet& A, int n);

struct EnvelopeLevel {
  int level = 0;
  int cells = 0;
  std::size_t unions = 0;
  bool exhaustive = true;
  double l1_norm = 0.0;
};

struct EnvelopeReport {
  std::uint64_t seed = 0;
  std::size_t nodes = 0;
  std::vector<EnvelopeLevel> levels;

  std::vector<double> values() const;
};

/// For each level 0..levels the hull of A is split into 2^level dyadic
/// pieces, the cells are their intersections with A, and the L1 norm of
/// max over unions B of |m(B)| is computed on one composite rule shared by
/// all levels. Up to 8 cells every union is enumerated; beyond that 2048
/// unions are drawn with `seed`. Throws DomainError for levels outside
/// [0,12] and BudgetError when the node-by-union product is too large.
EnvelopeReport order_envelope(const IntervalSet& A, int levels, const QuadratureConfig& cfg,
                              std::uint64_t seed = 20240611);

struct LaengReport {
  double p = 0.0;
  double measure = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
  /// (2 - 2^{2-p}) mu(A) zeta(p) Gamma(p+1) / pi^p, the value of the lhs
  /// for a single interval.
  double rhs_interval = 0.0;
  double rel_err_interval = 0.0;
};

/// rhs = (2 - 2^{1-p}) mu(A) zeta(p) Gamma(p+1) / pi^p.
double laeng_rhs(double measure, double p);
double laeng_rhs_interval(double measure, double p);

/// lhs = int_A |T(chi_A)|^p. Requires mu(A) > 0 and p in (1, 8].
LaengReport laeng_check(const IntervalSet& A, double p, const QuadratureConfig& cfg);

struct LexpReport {
  IntervalSet set;
  double lexp_norm = 0.0;
  double floor_value = 0.0;
  bool pass = false;
};

/// 1 / (e^2 pi).
double lexp_floor();

/// ||T(chi_S)||_{L_exp} through the rearrangement of |m(S)|.
LexpReport lexp_lower_experiment(const IntervalSet& S, const QuadratureConfig& cfg,
                                 int cells = 1 << 14);

}  // namespace fht
