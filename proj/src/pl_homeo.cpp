#include "plord/pl_homeo.hpp"

#include <algorithm>
#include <cstddef>

#include "plord/error.hpp"

namespace plord {

AffineGerm compose(const AffineGerm& f, const AffineGerm& g) {
  return AffineGerm{f.slope * g.slope, f.slope * g.offset + f.offset};
}

AffineGerm invert(const AffineGerm& f) {
  return AffineGerm{1 / f.slope, -f.offset / f.slope};
}

PLHomeo PLHomeo::from_breaks(std::vector<std::pair<Rat, Rat>> breaks,
                             Rat left_slope, Rat right_slope) {
  if (breaks.empty())
    throw Error(ErrorCode::InvalidHomeo, "breakpoint list must be nonempty");
  if (left_slope <= 0 || right_slope <= 0)
    throw Error(ErrorCode::InvalidHomeo, "tail slopes must be positive");
  for (size_t i = 1; i < breaks.size(); ++i) {
    if (breaks[i - 1].first >= breaks[i].first)
      throw Error(ErrorCode::InvalidHomeo, "x-coordinates must increase");
    if (breaks[i - 1].second >= breaks[i].second)
      throw Error(ErrorCode::InvalidHomeo, "y-coordinates must increase");
  }
  PLHomeo f;
  f.breaks_ = std::move(breaks);
  f.left_slope_ = std::move(left_slope);
  f.right_slope_ = std::move(right_slope);
  f.normalize();
  return f;
}

PLHomeo PLHomeo::identity() { return affine(1, 0); }

PLHomeo PLHomeo::affine(const Rat& a, const Rat& b) {
  if (a <= 0)
    throw Error(ErrorCode::InvalidHomeo, "affine slope must be positive");
  PLHomeo f;
  f.breaks_ = {{Rat(0), b}};
  f.left_slope_ = a;
  f.right_slope_ = a;
  return f;
}

void PLHomeo::normalize() {
  auto seg_slope = [&](size_t i) -> Rat {
    return (breaks_[i + 1].second - breaks_[i].second) /
           (breaks_[i + 1].first - breaks_[i].first);
  };
  bool changed = true;
  while (changed && breaks_.size() >= 2) {
    changed = false;
    if (seg_slope(0) == left_slope_) {
      breaks_.erase(breaks_.begin());
      changed = true;
      continue;
    }
    if (seg_slope(breaks_.size() - 2) == right_slope_) {
      breaks_.pop_back();
      changed = true;
      continue;
    }
    for (size_t i = 1; i + 1 < breaks_.size(); ++i) {
      if (seg_slope(i - 1) == seg_slope(i)) {
        breaks_.erase(breaks_.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (breaks_.size() == 1 && left_slope_ == right_slope_ &&
      breaks_[0].first != 0) {
    // globally affine: anchor at x = 0
    Rat b = breaks_[0].second - left_slope_ * breaks_[0].first;
    breaks_[0] = {Rat(0), std::move(b)};
  }
}

Rat PLHomeo::operator()(const Rat& x) const { return evaluate(*this, x); }

bool PLHomeo::is_identity() const {
  return breaks_.size() == 1 && breaks_[0].first == 0 &&
         breaks_[0].second == 0 && left_slope_ == 1 && right_slope_ == 1;
}

Rat evaluate(const PLHomeo& f, const Rat& x) {
  const auto& br = f.breaks();
  if (x <= br.front().first)
    return br.front().second + f.left_slope() * (x - br.front().first);
  if (x >= br.back().first)
    return br.back().second + f.right_slope() * (x - br.back().first);
  // first break with break.x > x; the segment is [it-1, it]
  auto it = std::upper_bound(
      br.begin(), br.end(), x,
      [](const Rat& v, const std::pair<Rat, Rat>& b) { return v < b.first; });
  const auto& b1 = *it;
  const auto& b0 = *(it - 1);
  if (x == b0.first) return b0.second;
  Rat slope = (b1.second - b0.second) / (b1.first - b0.first);
  return b0.second + slope * (x - b0.first);
}

Rat inverse_evaluate(const PLHomeo& f, const Rat& y) {
  const auto& br = f.breaks();
  if (y <= br.front().second)
    return br.front().first + (y - br.front().second) / f.left_slope();
  if (y >= br.back().second)
    return br.back().first + (y - br.back().second) / f.right_slope();
  auto it = std::upper_bound(
      br.begin(), br.end(), y,
      [](const Rat& v, const std::pair<Rat, Rat>& b) { return v < b.second; });
  const auto& b1 = *it;
  const auto& b0 = *(it - 1);
  if (y == b0.second) return b0.first;
  Rat slope = (b1.second - b0.second) / (b1.first - b0.first);
  return b0.first + (y - b0.second) / slope;
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  std::vector<Rat> knots;
  for (const auto& b : g.breaks()) knots.push_back(b.first);
  for (const auto& b : f.breaks()) knots.push_back(inverse_evaluate(g, b.first));
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<std::pair<Rat, Rat>> breaks;
  breaks.reserve(knots.size());
  for (const auto& x : knots) breaks.emplace_back(x, evaluate(f, evaluate(g, x)));
  return PLHomeo::from_breaks(std::move(breaks),
                              f.left_slope() * g.left_slope(),
                              f.right_slope() * g.right_slope());
}

PLHomeo invert(const PLHomeo& f) {
  std::vector<std::pair<Rat, Rat>> breaks;
  breaks.reserve(f.breaks().size());
  for (const auto& b : f.breaks()) breaks.emplace_back(b.second, b.first);
  return PLHomeo::from_breaks(std::move(breaks), 1 / f.left_slope(),
                              1 / f.right_slope());
}

namespace {

// Merged knot list of two maps; on each cell of the induced partition both
// maps are affine.
std::vector<Rat> merged_knots(const PLHomeo& f, const PLHomeo& g) {
  std::vector<Rat> knots;
  for (const auto& b : f.breaks()) knots.push_back(b.first);
  for (const auto& b : g.breaks()) knots.push_back(b.first);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

Rat slope_at_right_of(const PLHomeo& f, const Rat& x) {
  const auto& br = f.breaks();
  if (x >= br.back().first) return f.right_slope();
  if (x < br.front().first) return f.left_slope();
  auto it = std::upper_bound(
      br.begin(), br.end(), x,
      [](const Rat& v, const std::pair<Rat, Rat>& b) { return v < b.first; });
  const auto& b1 = *it;
  const auto& b0 = *(it - 1);
  return (b1.second - b0.second) / (b1.first - b0.first);
}

Rat slope_at_left_of(const PLHomeo& f, const Rat& x) {
  const auto& br = f.breaks();
  if (x <= br.front().first) return f.left_slope();
  if (x > br.back().first) return f.right_slope();
  auto it = std::lower_bound(
      br.begin(), br.end(), x,
      [](const std::pair<Rat, Rat>& b, const Rat& v) { return b.first < v; });
  const auto& b1 = *it;
  const auto& b0 = *(it - 1);
  return (b1.second - b0.second) / (b1.first - b0.first);
}

// All x with f(x) = g(x) that are isolated crossings, plus the merged knot
// list, sorted. Cells between consecutive returned points (and the two
// rays) carry a constant sign of f - g.
std::vector<Rat> crossing_partition(const PLHomeo& f, const PLHomeo& g) {
  std::vector<Rat> knots = merged_knots(f, g);
  std::vector<Rat> points = knots;
  auto add_crossing = [&](const Rat& lo, bool has_lo, const Rat& hi,
                          bool has_hi) {
    // f - g is affine on the piece; find an isolated zero strictly inside.
    Rat x0 = has_lo ? lo : hi - 1;
    Rat slope = has_lo ? slope_at_right_of(f, x0) - slope_at_right_of(g, x0)
                       : slope_at_left_of(f, hi) - slope_at_left_of(g, hi);
    if (slope == 0) return;
    Rat d0 = evaluate(f, x0) - evaluate(g, x0);
    Rat z = x0 - d0 / slope;
    if ((!has_lo || z > lo) && (!has_hi || z < hi)) points.push_back(z);
  };
  if (knots.empty()) return points;  // cannot happen: breaks are nonempty
  add_crossing(knots.front(), false, knots.front(), true);
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    add_crossing(knots[i], true, knots[i + 1], true);
  add_crossing(knots.back(), true, knots.back(), false);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

static PLHomeo pointwise_extremum(const PLHomeo& f, const PLHomeo& g,
                                  bool want_max) {
  std::vector<Rat> points = crossing_partition(f, g);
  std::vector<std::pair<Rat, Rat>> breaks;
  breaks.reserve(points.size());
  for (const auto& x : points) {
    Rat fx = evaluate(f, x);
    Rat gx = evaluate(g, x);
    breaks.emplace_back(x, want_max ? std::max(fx, gx) : std::min(fx, gx));
  }
  // Tail winners: no crossings beyond the extreme points, so a single probe
  // decides each ray (ties mean the maps coincide there).
  Rat left_probe = points.front() - 1;
  Rat fl = evaluate(f, left_probe), gl = evaluate(g, left_probe);
  Rat left = (fl == gl) ? f.left_slope()
                        : ((fl > gl) == want_max ? f.left_slope() : g.left_slope());
  Rat right_probe = points.back() + 1;
  Rat fr = evaluate(f, right_probe), gr = evaluate(g, right_probe);
  Rat right = (fr == gr)
                  ? f.right_slope()
                  : ((fr > gr) == want_max ? f.right_slope() : g.right_slope());
  return PLHomeo::from_breaks(std::move(breaks), std::move(left),
                              std::move(right));
}

PLHomeo pointwise_max(const PLHomeo& f, const PLHomeo& g) {
  return pointwise_extremum(f, g, true);
}

PLHomeo pointwise_min(const PLHomeo& f, const PLHomeo& g) {
  return pointwise_extremum(f, g, false);
}

PLHomeo plus_part(const PLHomeo& f) {
  return pointwise_max(f, PLHomeo::identity());
}

PLHomeo minus_part(const PLHomeo& f) {
  return pointwise_min(f, PLHomeo::identity());
}

SignSets sign_sets(const PLHomeo& f, const PLHomeo& g) {
  std::vector<Rat> points = crossing_partition(f, g);
  std::vector<int> point_sign(points.size());
  for (size_t i = 0; i < points.size(); ++i)
    point_sign[i] = sgn(evaluate(f, points[i]) - evaluate(g, points[i]));
  // Cell signs: rays plus the open cells between consecutive points.
  auto cell_sign = [&](const Rat& probe) {
    return sgn(evaluate(f, probe) - evaluate(g, probe));
  };
  std::vector<Interval> above, below;
  // current run of cells with the same nonzero sign
  std::optional<Rat> run_lo;
  bool run_open = false;
  int run_sign = 0;
  auto flush = [&](const std::optional<Rat>& hi) {
    if (!run_open) return;
    (run_sign > 0 ? above : below).push_back(Interval{run_lo, hi});
    run_open = false;
  };
  auto feed = [&](int s, const std::optional<Rat>& cell_lo) {
    if (run_open && s != run_sign) flush(cell_lo);
    if (!run_open && s != 0) {
      run_lo = cell_lo;
      run_sign = s;
      run_open = true;
    }
  };
  feed(cell_sign(points.front() - 1), std::nullopt);
  for (size_t i = 0; i < points.size(); ++i) {
    // the point itself: a zero breaks the run, a matching sign extends it
    if (point_sign[i] != (run_open ? run_sign : 0)) flush(points[i]);
    std::optional<Rat> lo = points[i];
    int s = (i + 1 < points.size())
                ? cell_sign(midpoint(points[i], points[i + 1]))
                : cell_sign(points.back() + 1);
    feed(s, lo);
  }
  flush(std::nullopt);  // a run still open here extends to +inf
  return SignSets{IntervalSet(std::move(above)), IntervalSet(std::move(below))};
}

IntervalSet above_set(const PLHomeo& f) {
  return sign_sets(f, PLHomeo::identity()).above;
}

IntervalSet below_set(const PLHomeo& f) {
  return sign_sets(f, PLHomeo::identity()).below;
}

IntervalSet difference_set(const PLHomeo& f, const PLHomeo& g) {
  SignSets s = sign_sets(f, g);
  return s.above.unite(s.below);
}

PLHomeo pl_bump(const Rat& lo, const Rat& hi, const Rat& height) {
  if (lo >= hi) throw Error(ErrorCode::InvalidBump, "empty support interval");
  if (height == 0)
    throw Error(ErrorCode::InvalidBump, "zero-height bump is degenerate");
  if (abs(height) >= (hi - lo) / 2)
    throw Error(ErrorCode::InvalidBump,
                "height too large for monotonicity on the support");
  Rat mid = midpoint(lo, hi);
  return PLHomeo::from_breaks({{lo, lo}, {mid, mid + height}, {hi, hi}}, 1, 1);
}

AffineGerm germ_at_infinity(const PLHomeo& f) {
  const auto& last = f.breaks().back();
  return AffineGerm{f.right_slope(), last.second - f.right_slope() * last.first};
}

}  // namespace plord
