#pragma once

namespace fht::special {

/// Gamma function for x > 0 (Lanczos, g = 7, nine terms; ~15 digits).
double gamma(double x);
/// Euler Beta B(p,q) = Gamma(p)Gamma(q)/Gamma(p+q), p,q > 0.
double beta(double p, double q);
/// B(1/2, lambda) for lambda in (0,1].
double beta_half(double lambda);
/// Riemann zeta for p > 1 via Borwein's accelerated alternating series.
double zeta(double p);

}  // namespace fht::special
