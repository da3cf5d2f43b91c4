#include "fht/transform.hpp"

#include "fht/special.hpp"

namespace fht {

double fht_indicator(const IntervalSet& S, double t) {
  detail::require_open(t, "fht_indicator");
  double sum = 0.0;
  for (const auto& piece : S.intervals()) {
    if (t == piece.lo || t == piece.hi) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "fht_indicator: t = " << t << " coincides with endpoint "
          << (t == piece.lo ? piece.lo : piece.hi) << " of " << S.to_string();
      throw DomainError(msg.str());
    }
    sum += std::log(std::abs(piece.hi - t) / std::abs(piece.lo - t));
  }
  return sum / std::numbers::pi;
}

double holder_bound(double lambda, double K) {
  if (!(K >= 0.0)) throw DomainError("holder_bound: K must be >= 0");
  return 2.0 / std::numbers::pi * K * special::beta_half(lambda);
}

}  // namespace fht
