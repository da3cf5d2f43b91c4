#include "fht/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

namespace fht::special {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double x) {
  // Valid for x >= 1/2.
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma: argument must be a finite positive number, got " +
                      std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

double beta(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("beta: arguments must be positive");
  return gamma(p) * gamma(q) / gamma(p + q);
}

double beta_half(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("beta_half: lambda must lie in (0,1], got " + std::to_string(lambda));
  }
  return beta(0.5, lambda);
}

double zeta(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("zeta: argument must exceed 1, got " + std::to_string(p));
  }
  // Dirichlet eta with Borwein's coefficients d_k, then zeta = eta/(1-2^(1-p)).
  constexpr int n = 40;
  std::array<double, n + 1> d{};
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)!(2i)!) built incrementally
  double sum = term;
  d[0] = n * sum;
  for (int i = 1; i <= n; ++i) {
    term *= static_cast<double>(n + i - 1) * 4.0 * (n - i + 1) /
            ((2.0 * i - 1.0) * (2.0 * i));
    sum += term;
    d[i] = n * sum;
  }
  double eta = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    eta += sign * (d[k] - d[n]) / std::pow(k + 1.0, p);
  }
  eta = -eta / d[n];
  return eta / (1.0 - std::pow(2.0, 1.0 - p));
}

}  // namespace fht::special
