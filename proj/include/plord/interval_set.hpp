#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plord/rational.hpp"

namespace plord {

// Open interval with optional infinite ends. lo = nullopt means -inf,
// hi = nullopt means +inf. A constructed interval always has lo < hi.
struct Interval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  bool contains(const Rat& x) const {
    return (!lo || *lo < x) && (!hi || x < *hi);
  }
  bool closure_contains(const Rat& x) const {
    return (!lo || *lo <= x) && (!hi || x <= *hi);
  }
  bool operator==(const Interval& o) const = default;
};

// A finite union of disjoint open intervals in normal form: sorted, with
// overlapping pieces merged into connected components. Two components may
// share an endpoint, e.g. (0,1) and (1,2): their union is not an interval
// because the shared endpoint is excluded, so they are kept separate.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet whole_line();
  static IntervalSet segment(const Rat& lo, const Rat& hi);
  static IntervalSet ray_below(const Rat& hi);   // (-inf, hi)
  static IntervalSet ray_above(const Rat& lo);   // (lo, +inf)

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_whole_line() const;

  bool contains(const Rat& x) const;
  bool closure_contains(const Rat& x) const;
  // True when the closure of the union is all of R.
  bool closure_is_whole_line() const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  // Removes finitely many points, splitting intervals around them.
  IntervalSet minus_points(const std::vector<Rat>& pts) const;
  // Open part of this \ closure(o).
  IntervalSet minus_closure(const IntervalSet& o) const;
  // Mirror image {-x : x in this}.
  IntervalSet negate() const;

  // Finite endpoints of all components, sorted, deduplicated.
  std::vector<Rat> finite_endpoints() const;

  bool operator==(const IntervalSet& o) const = default;

  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

// Open interior of the symmetric difference plus the finitely many isolated
// points that belong to the set-theoretic symmetric difference but not to
// its interior (these are always interval endpoints).
struct SymmetricDifference {
  IntervalSet open_part;
  std::vector<Rat> isolated_points;
  bool empty() const { return open_part.is_empty() && isolated_points.empty(); }
};

SymmetricDifference symmetric_difference(const IntervalSet& a,
                                         const IntervalSet& b);

}  // namespace plord
