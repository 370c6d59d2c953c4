#pragma once

#include <utility>
#include <vector>

#include "plord/interval_set.hpp"
#include "plord/rational.hpp"

namespace plord {

// Germ at +inf of a PL map with affine tails: the rightmost piece
// x |-> slope*x + offset. Composition follows map composition.
struct AffineGerm {
  Rat slope;   // > 0
  Rat offset;

  bool is_trivial() const { return slope == 1 && offset == 0; }
  Rat apply(const Rat& x) const { return slope * x + offset; }
  bool operator==(const AffineGerm& o) const = default;
};

AffineGerm compose(const AffineGerm& f, const AffineGerm& g);  // f after g
AffineGerm invert(const AffineGerm& f);

// Increasing piecewise-linear self-homeomorphism of the line with rational
// breakpoints and affine tails.
//
// Normal form: collinear breakpoints removed; a globally affine map is
// anchored at the single breakpoint x = 0. Equality is normal-form
// identity, which coincides with equality as functions.
class PLHomeo {
 public:
  PLHomeo() : breaks_{{Rat(0), Rat(0)}}, left_slope_(1), right_slope_(1) {}

  // Constructs from breakpoint list ((x, f(x)) pairs, strictly increasing
  // in both coordinates) and tail slopes. Throws Error(InvalidHomeo) if the
  // data does not describe an increasing PL bijection.
  static PLHomeo from_breaks(std::vector<std::pair<Rat, Rat>> breaks,
                             Rat left_slope, Rat right_slope);
  static PLHomeo identity();
  static PLHomeo affine(const Rat& a, const Rat& b);  // x |-> a x + b, a > 0
  static PLHomeo translation(const Rat& c) { return affine(1, c); }

  const std::vector<std::pair<Rat, Rat>>& breaks() const { return breaks_; }
  const Rat& left_slope() const { return left_slope_; }
  const Rat& right_slope() const { return right_slope_; }

  Rat operator()(const Rat& x) const;
  bool is_identity() const;

  bool operator==(const PLHomeo& o) const = default;

 private:
  void normalize();

  std::vector<std::pair<Rat, Rat>> breaks_;  // nonempty
  Rat left_slope_;
  Rat right_slope_;
};

Rat evaluate(const PLHomeo& f, const Rat& x);
// Unique x with f(x) = y.
Rat inverse_evaluate(const PLHomeo& f, const Rat& y);

PLHomeo compose(const PLHomeo& f, const PLHomeo& g);  // x |-> f(g(x))
PLHomeo invert(const PLHomeo& f);

PLHomeo pointwise_max(const PLHomeo& f, const PLHomeo& g);
PLHomeo pointwise_min(const PLHomeo& f, const PLHomeo& g);

PLHomeo plus_part(const PLHomeo& f);   // max(f, id)
PLHomeo minus_part(const PLHomeo& f);  // min(f, id)

// The exact open sets {x : f(x) > g(x)} and {x : f(x) < g(x)}.
struct SignSets {
  IntervalSet above;
  IntervalSet below;
};
SignSets sign_sets(const PLHomeo& f, const PLHomeo& g);

IntervalSet above_set(const PLHomeo& f);  // {x : f(x) > x}
IntervalSet below_set(const PLHomeo& f);  // {x : f(x) < x}
IntervalSet difference_set(const PLHomeo& f, const PLHomeo& g);

// PL bump supported on (lo, hi): identity outside, with a single interior
// breakpoint at the midpoint displaced by `height`. Requires lo < hi and
// 0 < |height| < (hi - lo)/2; throws Error(InvalidBump) otherwise.
PLHomeo pl_bump(const Rat& lo, const Rat& hi, const Rat& height);

AffineGerm germ_at_infinity(const PLHomeo& f);

}  // namespace plord
