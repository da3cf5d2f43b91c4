#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fht {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint open subintervals of (-1,1), kept sorted with
/// touching pieces merged so that equal sets compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> pieces);
  explicit IntervalSet(std::vector<Interval> pieces);

  /// Builds from a flat endpoint list a0,b0,a1,b1,...
  static IntervalSet from_endpoints(std::span<const double> flat);
  static IntervalSet whole() { return IntervalSet{{-1.0, 1.0}}; }

  const std::vector<Interval>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  double measure() const;
  /// Membership in the open set.
  bool contains(double x) const;
  /// Sorted endpoints of all pieces.
  std::vector<double> endpoints() const;
  /// Endpoints lying strictly inside (-1,1).
  std::vector<double> interior_endpoints() const;

  IntervalSet intersect(double lo, double hi) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  /// Image under x -> -x.
  IntervalSet reflected() const;
  bool within(double lo, double hi) const;

  std::string to_string() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  void normalize();

  std::vector<Interval> pieces_;
};

}  // namespace fht
