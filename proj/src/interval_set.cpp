#include "fht/interval_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fht/errors.hpp"

namespace fht {

IntervalSet::IntervalSet(std::initializer_list<Interval> pieces)
    : pieces_(pieces) {
  normalize();
}

IntervalSet::IntervalSet(std::vector<Interval> pieces)
    : pieces_(std::move(pieces)) {
  normalize();
}

IntervalSet IntervalSet::from_endpoints(std::span<const double> flat) {
  if (flat.size() % 2 != 0) {
    throw DomainError("interval set needs an even number of endpoints, got " +
                      std::to_string(flat.size()));
  }
  std::vector<Interval> pieces;
  pieces.reserve(flat.size() / 2);
  for (std::size_t i = 0; i < flat.size(); i += 2) {
    pieces.push_back({flat[i], flat[i + 1]});
  }
  return IntervalSet(std::move(pieces));
}

void IntervalSet::normalize() {
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || p.lo < -1.0 ||
        p.hi > 1.0 || !(p.lo < p.hi)) {
      std::ostringstream msg;
      msg << "invalid interval (" << p.lo << ", " << p.hi
          << "): need -1 <= a < b <= 1";
      throw DomainError(msg.str());
    }
  }
  std::stable_sort(pieces_.begin(), pieces_.end(),
                   [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> merged;
  merged.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  pieces_ = std::move(merged);
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& p : pieces_) m += p.length();
  return m;
}

bool IntervalSet::contains(double x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [x](const Interval& p) { return p.lo < x && x < p.hi; });
}

std::vector<double> IntervalSet::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * pieces_.size());
  for (const auto& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  return out;
}

std::vector<double> IntervalSet::interior_endpoints() const {
  std::vector<double> out;
  for (double e : endpoints()) {
    if (e > -1.0 && e < 1.0) out.push_back(e);
  }
  return out;
}

IntervalSet IntervalSet::intersect(double lo, double hi) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    const double a = std::max(p.lo, lo);
    const double b = std::min(p.hi, hi);
    if (a < b) out.push_back({a, b});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const auto& q : other.pieces_) {
    for (const auto& p : intersect(q.lo, q.hi).pieces_) out.push_back(p);
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::reflected() const {
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back({-p.hi, -p.lo});
  return IntervalSet(std::move(out));
}

bool IntervalSet::within(double lo, double hi) const {
  return std::all_of(pieces_.begin(), pieces_.end(), [&](const Interval& p) {
    return p.lo >= lo && p.hi <= hi;
  });
}

std::string IntervalSet::to_string() const {
  if (pieces_.empty()) return "{}";
  const auto shortest = [](double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  };
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " U ";
    out += "(" + shortest(pieces_[i].lo) + ", " + shortest(pieces_[i].hi) + ")";
  }
  return out;
}

}  // namespace fht
