#include "plord/interval_set.hpp"

#include <algorithm>

#include "plord/error.hpp"

namespace plord {

namespace {

// lo endpoints ordered with -inf first.
bool lo_less(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  return *a < *b;
}

// True when the open intervals a and b overlap (share at least one point).
bool overlaps(const Interval& a, const Interval& b) {
  // a.lo < b.hi and b.lo < a.hi, with infinities dominating.
  bool left_ok = !a.lo || !b.hi || *a.lo < *b.hi;
  bool right_ok = !b.lo || !a.hi || *b.lo < *a.hi;
  return left_ok && right_ok;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::vector<Interval> in;
  in.reserve(parts.size());
  for (auto& iv : parts) {
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi) continue;  // drop empty pieces
    in.push_back(std::move(iv));
  }
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return lo_less(a.lo, b.lo);
    // shorter first is irrelevant after merging; any stable rule works
    if (!a.hi) return false;
    if (!b.hi) return true;
    return *a.hi < *b.hi;
  });
  for (auto& iv : in) {
    if (!parts_.empty() && overlaps(parts_.back(), iv)) {
      Interval& last = parts_.back();
      if (last.hi && (!iv.hi || *iv.hi > *last.hi)) last.hi = iv.hi;
      continue;
    }
    parts_.push_back(std::move(iv));
  }
}

IntervalSet IntervalSet::whole_line() {
  return IntervalSet({Interval{std::nullopt, std::nullopt}});
}

IntervalSet IntervalSet::segment(const Rat& lo, const Rat& hi) {
  return IntervalSet({Interval{lo, hi}});
}

IntervalSet IntervalSet::ray_below(const Rat& hi) {
  return IntervalSet({Interval{std::nullopt, hi}});
}

IntervalSet IntervalSet::ray_above(const Rat& lo) {
  return IntervalSet({Interval{lo, std::nullopt}});
}

bool IntervalSet::is_whole_line() const {
  return parts_.size() == 1 && !parts_[0].lo && !parts_[0].hi;
}

bool IntervalSet::contains(const Rat& x) const {
  for (const auto& iv : parts_) {
    if (iv.contains(x)) return true;
    if (iv.lo && *iv.lo >= x) break;
  }
  return false;
}

bool IntervalSet::closure_contains(const Rat& x) const {
  for (const auto& iv : parts_) {
    if (iv.closure_contains(x)) return true;
    if (iv.lo && *iv.lo > x) break;
  }
  return false;
}

bool IntervalSet::closure_is_whole_line() const {
  if (parts_.empty()) return false;
  if (parts_.front().lo) return false;
  // Walk components; closures must chain without gaps.
  std::optional<Rat> reach = parts_.front().hi;  // nullopt = +inf reached
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (!reach) return true;
    if (!parts_[i].lo || *parts_[i].lo <= *reach) {
      if (!parts_[i].hi || !reach || *parts_[i].hi > *reach) reach = parts_[i].hi;
    } else {
      return false;  // open gap between closures
    }
  }
  return !reach;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : o.parts_) {
      if (!overlaps(a, b)) continue;
      Interval c;
      c.lo = lo_less(a.lo, b.lo) ? b.lo : a.lo;
      if (!a.hi) c.hi = b.hi;
      else if (!b.hi) c.hi = a.hi;
      else c.hi = *a.hi < *b.hi ? a.hi : b.hi;
      out.push_back(std::move(c));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus_points(const std::vector<Rat>& pts) const {
  if (pts.empty()) return *this;
  std::vector<Interval> out;
  for (const auto& iv : parts_) {
    std::vector<Rat> inside;
    for (const auto& p : pts)
      if (iv.contains(p)) inside.push_back(p);
    std::sort(inside.begin(), inside.end());
    std::optional<Rat> lo = iv.lo;
    for (const auto& p : inside) {
      out.push_back(Interval{lo, p});
      lo = p;
    }
    out.push_back(Interval{lo, iv.hi});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus_closure(const IntervalSet& o) const {
  IntervalSet result = *this;
  for (const auto& iv : o.parts_) {
    std::vector<Interval> out;
    for (const auto& a : result.parts_) {
      // a minus the closed interval [iv.lo, iv.hi]
      bool left_nonempty = iv.lo && (!a.lo || *a.lo < *iv.lo);
      bool right_nonempty = iv.hi && (!a.hi || *a.hi > *iv.hi);
      bool disjoint =
          (iv.hi && a.lo && *iv.hi < *a.lo) || (iv.lo && a.hi && *iv.lo > *a.hi);
      if (disjoint) {
        out.push_back(a);
        continue;
      }
      if (left_nonempty) {
        Interval left{a.lo, iv.lo};
        if (!left.lo || *left.lo < *left.hi) out.push_back(left);
      }
      if (right_nonempty) {
        Interval right{iv.hi, a.hi};
        if (!right.hi || *right.lo < *right.hi) out.push_back(right);
      }
    }
    result.parts_ = std::move(out);
  }
  return result;
}

IntervalSet IntervalSet::negate() const {
  std::vector<Interval> out;
  for (const auto& iv : parts_) {
    Interval n;
    if (iv.hi) n.lo = -*iv.hi;
    if (iv.lo) n.hi = -*iv.lo;
    out.push_back(std::move(n));
  }
  return IntervalSet(std::move(out));
}

std::vector<Rat> IntervalSet::finite_endpoints() const {
  std::vector<Rat> out;
  for (const auto& iv : parts_) {
    if (iv.lo) out.push_back(*iv.lo);
    if (iv.hi) out.push_back(*iv.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += "(";
    s += parts_[i].lo ? rat_to_string(*parts_[i].lo) : "-inf";
    s += ",";
    s += parts_[i].hi ? rat_to_string(*parts_[i].hi) : "inf";
    s += ")";
  }
  return s;
}

SymmetricDifference symmetric_difference(const IntervalSet& a,
                                         const IntervalSet& b) {
  SymmetricDifference d;
  d.open_part = a.minus_closure(b).unite(b.minus_closure(a));
  // Everything else in the symmetric difference sits on component
  // boundaries of a or b.
  std::vector<Rat> candidates = a.finite_endpoints();
  for (const auto& p : b.finite_endpoints()) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& p : candidates) {
    if (a.contains(p) != b.contains(p) && !d.open_part.contains(p))
      d.isolated_points.push_back(p);
  }
  return d;
}

}  // namespace plord
