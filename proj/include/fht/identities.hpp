#pragma once

#include <string>
#include <vector>

#include "fht/interval_set.hpp"
#include "fht/quadrature.hpp"
#include "fht/sampled_function.hpp"

namespace fht {

struct ParsevalReport {
  Complex f_Tg;  ///< int f T(g)
  Complex g_Tf;  ///< int g T(f)
  double residual = 0.0;
};

/// Both sides of int f T(g) = -int g T(f). Transforms come from the closed
/// form when the function carries one and from quadrature otherwise.
/// Throws DivergenceError if either integral is non-finite or overflows.
ParsevalReport parseval(const Function& f, const Function& g, const QuadratureConfig& cfg);
double parseval_residual(const Function& f, const Function& g, const QuadratureConfig& cfg);

struct InversionReport {
  double max_residual = 0.0;
  double worst_x = 0.0;
  std::size_t points = 0;
};

/// sup over the clearance grid of |T^(T(chi_S))(x) + mu(S)/(pi w(x)) - chi_S(x)|.
/// The grid is chebyshev_grid(M) minus the delta-neighbourhoods of +-1 and
/// of the endpoints of S; ConfigError if nothing is left.
InversionReport inversion_check(const IntervalSet& S, const QuadratureConfig& cfg);
double inversion_residual(const IntervalSet& S, const QuadratureConfig& cfg);

/// sum_j coeffs[j] chi_{cells[j]} in canonical form: pairwise disjoint
/// cells, no zero coefficient, one cell per distinct coefficient.
class SimpleFunction {
 public:
  SimpleFunction() = default;
  /// Throws DomainError if the sizes differ or two cells overlap.
  SimpleFunction(std::vector<IntervalSet> cells, std::vector<Complex> coeffs);

  const std::vector<IntervalSet>& cells() const { return cells_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return cells_.empty(); }

  Complex operator()(double x) const;
  /// Every cell endpoint inside (-1,1), sorted.
  std::vector<double> endpoints() const;
  SimpleFunction scaled(Complex c) const;
  /// Sum with a function supported on a disjoint set.
  SimpleFunction disjoint_sum(const SimpleFunction& other) const;
  /// As a SampledFunction with jumps at the cell endpoints.
  Function as_function() const;

 private:
  std::vector<IntervalSet> cells_;
  std::vector<Complex> coeffs_;
};

/// sum_j a_j m(A_j) as a closed-form function of t.
Function integrate_simple(const SimpleFunction& phi);

enum class ProbeVerdict { pass, diverged, not_stabilized };
std::string to_string(ProbeVerdict v);

struct ProbeWitness {
  std::vector<double> truncations;  ///< h per refinement step
  std::vector<double> integrals;    ///< int |f T(g)| with h-neighbourhoods removed
  ProbeVerdict verdict = ProbeVerdict::not_stabilized;
};

struct ProbeReport {
  std::vector<ProbeWitness> witnesses;
  ProbeVerdict verdict = ProbeVerdict::pass;
  bool pass() const { return verdict == ProbeVerdict::pass; }
};

/// One-sided LlogL membership probe: int |f T(g)| for each witness g with
/// the h-neighbourhoods of +-1 and of all breakpoints removed, h halving
/// from 1e-2 for at most 44 steps and never below 4096 eps. A witness
/// passes once the relative change between consecutive steps drops below
/// 1e-3; otherwise it is reported as diverged (non-finite or overflow) or
/// not_stabilized.
ProbeReport llogl_membership_probe(const Function& f, const std::vector<Function>& witnesses,
                                   const QuadratureConfig& cfg);

}  // namespace fht
