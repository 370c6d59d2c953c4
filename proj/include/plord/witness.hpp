#pragma once

#include <utility>
#include <vector>

#include "plord/interval_set.hpp"
#include "plord/ordering.hpp"
#include "plord/pl_homeo.hpp"

namespace plord {

// Piecewise-linear function of t on [0, inf), strictly decreasing. Houses
// Theta(x, .) for fixed x: the composition of the plus-parts with every
// interior minus-part replaced by the translation u -> u - t.
struct ThetaInT {
  std::vector<std::pair<Rat, Rat>> knots;  // (t, value), t[0] == 0
  Rat tail_slope;                          // slope beyond the last knot, < 0

  Rat value_at(const Rat& t) const;
  // Unique t >= 0 with value == target; requires value_at(0) >= target.
  Rat solve_for(const Rat& target) const;
};

// Theta(x, t) = p_1(p_2(... p_n(x - t) - t ...) - t) for plus-parts p_i.
// Throws Error(NotAPlusPart) if some p_i dips below the identity.
ThetaInT theta_in_t(const std::vector<PLHomeo>& plus_parts, const Rat& x);

// The unique t_x >= 0 with Theta(x, t_x) = x; zero iff no plus-part moves x.
Rat solve_t(const std::vector<PLHomeo>& plus_parts, const Rat& x);

// One half of the one-sided factorization: parts g_i sharing each f_i's
// crossing sets, whose product is above the identity exactly on the common
// set A, together with the floor function gamma used to build them.
struct AnBHalf {
  std::vector<PLHomeo> parts;
  PLHomeo product;
  PLHomeo gamma;
  int rounds = 0;  // refinement rounds consumed by the gamma search
};

// Exact crossing-set bookkeeping for an AnB run, all recomputed from the
// outputs (never trusted from the construction).
struct AnBCertificate {
  IntervalSet common;                    // A
  IntervalSet g_above, g_below;          // = A, empty
  IntervalSet h_above, h_below;          // = empty, A
  std::vector<IntervalSet> part_above;   // per g-part
  std::vector<IntervalSet> part_below;
};

struct AnBResult {
  std::vector<PLHomeo> g_parts;
  PLHomeo g;
  std::vector<PLHomeo> h_parts;
  PLHomeo h;
  PLHomeo gamma;
  AnBCertificate certificate;
  int rounds = 0;
};

// Requires the union of the inputs' above-sets to equal the union of their
// below-sets exactly; throws Error(PreconditionViolated) with the symmetric
// difference as certificate otherwise. Postconditions are verified exactly
// before returning; a gamma search that cannot be completed within the
// round cap throws Error(ConstructionFailed).
AnBHalf construct_g(const std::vector<PLHomeo>& fs, int max_rounds = 20);
// Mirror half, built from the inverses; parts match the inputs' crossing
// sets under index reversal i -> n-1-i.
AnBHalf construct_h(const std::vector<PLHomeo>& fs, int max_rounds = 20);
AnBResult build_anb(const std::vector<PLHomeo>& fs, int max_rounds = 20);

// Greedy finite-agreement construction: a standard ordering making every
// input positive. Inputs must be nontrivial. When the joint crossing
// obstruction applies, throws Error(NotJointlyPositivizable) with the stage
// and the common set as certificate.
StandardOrdering approximate_typical(const std::vector<PLHomeo>& fs);

// Bump supported on (x - a, x + a), displacing x upward by a/2.
PLHomeo relevance_bump(const Rat& x, const Rat& a);

// Product of bumps on the given intervals, alternating up/down by list
// position; start_parity Positive puts an up-bump on position 0. Intervals
// must be pairwise disjoint (Error(InvalidIntervals) otherwise); an empty
// list yields the identity.
PLHomeo alternating_bump(const std::vector<std::pair<Rat, Rat>>& intervals,
                         Sign start_parity);

// Two maps with the same nontrivial germ (slope 1, offset 1) at +inf,
// straddling x: first(x) = x + 1/2, second(x) = x - 1/2.
std::pair<PLHomeo, PLHomeo> same_germ_pair(const Rat& x);

// The pair (x+1, x+1 glued to 2x-1 at x = 2): equal crossing sets (the
// whole line above the diagonal), distinct germs (1,1) and (2,-1).
std::pair<PLHomeo, PLHomeo> separating_pair();

}  // namespace plord
