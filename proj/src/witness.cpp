#include "plord/witness.hpp"

#include <algorithm>
#include <map>

#include "plord/error.hpp"

namespace plord {

Rat ThetaInT::value_at(const Rat& t) const {
  if (t <= knots.front().first) {
    // only t >= 0 is ever queried and knots start at t = 0
    return knots.front().second;
  }
  if (t >= knots.back().first)
    return knots.back().second + tail_slope * (t - knots.back().first);
  auto it = std::upper_bound(
      knots.begin(), knots.end(), t,
      [](const Rat& v, const std::pair<Rat, Rat>& k) { return v < k.first; });
  const auto& k1 = *it;
  const auto& k0 = *(it - 1);
  if (t == k0.first) return k0.second;
  Rat slope = (k1.second - k0.second) / (k1.first - k0.first);
  return k0.second + slope * (t - k0.first);
}

Rat ThetaInT::solve_for(const Rat& target) const {
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    if (knots[i].second >= target && target >= knots[i + 1].second) {
      if (target == knots[i].second) return knots[i].first;
      if (target == knots[i + 1].second) return knots[i + 1].first;
      Rat slope = (knots[i + 1].second - knots[i].second) /
                  (knots[i + 1].first - knots[i].first);
      return knots[i].first + (target - knots[i].second) / slope;
    }
  }
  // tail piece
  return knots.back().first + (target - knots.back().second) / tail_slope;
}

namespace {

ThetaInT subtract_t(ThetaInT f) {
  for (auto& [t, v] : f.knots) v -= t;
  f.tail_slope -= 1;
  return f;
}

ThetaInT apply_map(const PLHomeo& p, const ThetaInT& f) {
  std::vector<Rat> ts;
  ts.reserve(f.knots.size());
  for (const auto& [t, v] : f.knots) ts.push_back(t);
  // f is strictly decreasing, so each breakpoint value of p below f(0) is
  // crossed exactly once.
  for (const auto& [bx, by] : p.breaks()) {
    if (bx >= f.knots.front().second) continue;
    bool found = false;
    for (size_t i = 0; i + 1 < f.knots.size() && !found; ++i) {
      if (f.knots[i].second >= bx && bx >= f.knots[i + 1].second) {
        Rat slope = (f.knots[i + 1].second - f.knots[i].second) /
                    (f.knots[i + 1].first - f.knots[i].first);
        ts.push_back(f.knots[i].first + (bx - f.knots[i].second) / slope);
        found = true;
      }
    }
    if (!found)
      ts.push_back(f.knots.back().first +
                   (bx - f.knots.back().second) / f.tail_slope);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  ThetaInT g;
  g.knots.reserve(ts.size());
  for (const auto& t : ts) g.knots.emplace_back(t, evaluate(p, f.value_at(t)));
  // Beyond the last knot f sits below every breakpoint of p.
  Rat f_tail = f.tail_slope;
  g.tail_slope = p.left_slope() * f_tail;
  return g;
}

PLHomeo product_of(const std::vector<PLHomeo>& maps) {
  if (maps.empty()) return PLHomeo::identity();
  PLHomeo acc = maps.front();
  for (size_t i = 1; i < maps.size(); ++i) acc = compose(acc, maps[i]);
  return acc;
}

}  // namespace

namespace {

ThetaInT theta_raw(const std::vector<PLHomeo>& plus_parts, const Rat& x) {
  ThetaInT u;
  u.knots = {{Rat(0), x}};
  u.tail_slope = -1;
  for (size_t i = plus_parts.size(); i-- > 0;) {
    u = apply_map(plus_parts[i], u);
    if (i > 0) u = subtract_t(u);
  }
  return u;
}

void require_plus_parts(const std::vector<PLHomeo>& plus_parts) {
  for (const auto& p : plus_parts)
    if (!below_set(p).is_empty())
      throw Error(ErrorCode::NotAPlusPart, "plus-part dips below the identity");
}

}  // namespace

ThetaInT theta_in_t(const std::vector<PLHomeo>& plus_parts, const Rat& x) {
  require_plus_parts(plus_parts);
  return theta_raw(plus_parts, x);
}

Rat solve_t(const std::vector<PLHomeo>& plus_parts, const Rat& x) {
  require_plus_parts(plus_parts);
  return theta_raw(plus_parts, x).solve_for(x);
}

// --- gamma construction -----------------------------------------------------

namespace {

struct GammaBuilder {
  const std::vector<PLHomeo>& fs;
  std::vector<PLHomeo> plus_parts;
  std::vector<PLHomeo> minus_parts;
  PLHomeo f_plus = PLHomeo::identity();
  PLHomeo f_minus = PLHomeo::identity();
  Rat breaks_extent{1};  // max |x| over breakpoints of everything involved
  std::map<Rat, Rat> t_cache;

  explicit GammaBuilder(const std::vector<PLHomeo>& inputs) : fs(inputs) {
    for (const auto& f : fs) {
      plus_parts.push_back(plus_part(f));
      minus_parts.push_back(minus_part(f));
    }
    f_plus = product_of(plus_parts);
    f_minus = product_of(minus_parts);
    auto extend = [&](const PLHomeo& m) {
      for (const auto& [bx, by] : m.breaks()) {
        if (abs(bx) > breaks_extent) breaks_extent = abs(bx);
        if (abs(by) > breaks_extent) breaks_extent = abs(by);
      }
    };
    for (const auto& f : fs) extend(f);
    for (const auto& p : plus_parts) extend(p);
    for (const auto& m : minus_parts) extend(m);
    extend(f_plus);
    extend(f_minus);
  }

  const Rat& t_at(const Rat& x) {
    auto it = t_cache.find(x);
    if (it != t_cache.end()) return it->second;
    return t_cache.emplace(x, theta_raw(plus_parts, x).solve_for(x))
        .first->second;
  }

  // Min of sampled t over the bracket [(f+)^-1(y), (f-)^-1(y)], sampling
  // the bracket ends and every grid point inside.
  Rat sampled_tau(const Rat& y, const std::vector<Rat>& grid) {
    Rat zl = inverse_evaluate(f_plus, y);
    Rat zr = inverse_evaluate(f_minus, y);
    Rat tau = t_at(zl);
    Rat tr = t_at(zr);
    if (tr < tau) tau = tr;
    auto lo = std::upper_bound(grid.begin(), grid.end(), zl);
    auto hi = std::lower_bound(grid.begin(), grid.end(), zr);
    for (auto it = lo; it != hi; ++it) {
      const Rat& tv = t_at(*it);
      if (tv < tau) tau = tv;
    }
    return tau;
  }

  // Sample grid inside a component, refined `round` extra rounds.
  std::vector<Rat> component_grid(const Rat& lo, const Rat& hi, int round) {
    std::vector<Rat> pts = {lo, hi};
    auto add = [&](const Rat& v) {
      if (lo < v && v < hi) pts.push_back(v);
    };
    auto add_breaks = [&](const PLHomeo& m) {
      for (const auto& [bx, by] : m.breaks()) add(bx);
    };
    for (const auto& f : fs) add_breaks(f);
    for (const auto& p : plus_parts) add_breaks(p);
    for (const auto& m : minus_parts) add_breaks(m);
    add_breaks(f_plus);
    add_breaks(f_minus);
    std::vector<Rat> seeds = pts;
    for (const auto& x : seeds) {
      add(evaluate(f_plus, x));
      add(evaluate(f_minus, x));
      add(inverse_evaluate(f_plus, x));
      add(inverse_evaluate(f_minus, x));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (int r = 0; r <= round; ++r) {
      std::vector<Rat> finer;
      finer.reserve(pts.size() * 2);
      for (size_t i = 0; i < pts.size(); ++i) {
        finer.push_back(pts[i]);
        if (i + 1 < pts.size()) finer.push_back(midpoint(pts[i], pts[i + 1]));
      }
      pts = std::move(finer);
    }
    return pts;
  }

  // Interior knot values: the sampled, safety-scaled floor construction
  // with the running-sup monotonicity fix.
  std::vector<std::pair<Rat, Rat>> interior_knots(const std::vector<Rat>& grid,
                                                  const Rat& factor,
                                                  std::optional<Rat> left_pin) {
    std::vector<std::pair<Rat, Rat>> knots;
    std::optional<Rat> running;
    if (left_pin) running = *left_pin;
    for (const auto& y : grid) {
      Rat v0 = y - factor * sampled_tau(y, grid);
      if (!running || v0 > *running) running = v0;
      knots.emplace_back(y, (y + *running) / 2);
    }
    return knots;
  }

  // Tail slope for the right-unbounded end, from three far t samples.
  Rat right_tail_slope(const Rat& x_far) {
    Rat t1 = t_at(x_far), t2 = t_at(x_far + 1), t3 = t_at(x_far + 2);
    Rat alpha = t2 - t1;
    if (t3 - t2 != alpha || alpha <= 0) return Rat(1);
    Rat a_plus = f_plus.right_slope();
    if (a_plus <= alpha) a_plus = alpha + 1;
    return 1 - alpha / (2 * a_plus);
  }

  Rat left_tail_slope(const Rat& x_far) {
    Rat t1 = t_at(x_far), t2 = t_at(x_far - 1), t3 = t_at(x_far - 2);
    Rat alpha = t2 - t1;
    if (t3 - t2 != alpha || alpha <= 0) return Rat(1);
    Rat a_minus = f_minus.left_slope();
    return 1 + alpha / (2 * a_minus);
  }

  PLHomeo build(const IntervalSet& a, int round) {
    std::vector<std::pair<Rat, Rat>> breaks;
    Rat left_slope{1}, right_slope{1};
    Rat far = breaks_extent + 2 + Rat(round) * (breaks_extent + 1);
    for (const auto& comp : a.parts()) {
      Rat lo = comp.lo ? *comp.lo : Rat(-far);
      Rat hi = comp.hi ? *comp.hi : far;
      if (hi <= lo) hi = lo + 1;
      std::vector<Rat> grid = component_grid(lo, hi, round);
      // grid includes the endpoints; pins are emitted separately
      std::vector<Rat> interior(grid.begin() + 1, grid.end() - 1);
      if (interior.empty()) interior.push_back(midpoint(lo, hi));
      Rat factor = make_rat(BigInt(1), BigInt(1) << (round + 1));
      if (comp.lo) breaks.emplace_back(lo, lo);
      std::optional<Rat> pin;
      if (comp.lo) pin = lo;
      std::vector<Rat> sample_grid = interior;
      if (!comp.lo) sample_grid.insert(sample_grid.begin(), lo);
      if (!comp.hi) sample_grid.push_back(hi);
      auto knots = interior_knots(sample_grid, factor, pin);
      for (auto& k : knots) breaks.push_back(std::move(k));
      if (comp.hi) breaks.emplace_back(hi, hi);
      if (!comp.lo) left_slope = left_tail_slope(-far);
      if (!comp.hi) right_slope = right_tail_slope(far);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return PLHomeo::from_breaks(std::move(breaks), left_slope, right_slope);
  }
};

bool verify_half(const std::vector<PLHomeo>& fs, const AnBHalf& half,
                 const IntervalSet& a) {
  SignSets gs = sign_sets(half.gamma, PLHomeo::identity());
  if (!gs.above.is_empty() || !(gs.below == a)) return false;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (!(above_set(half.parts[i]) == above_set(fs[i]))) return false;
    if (!(below_set(half.parts[i]) == below_set(fs[i]))) return false;
  }
  SignSets ps = sign_sets(half.product, PLHomeo::identity());
  return ps.above == a && ps.below.is_empty();
}

std::string symdiff_detail(const SymmetricDifference& sd) {
  std::string s = "open: " + sd.open_part.to_string();
  if (!sd.isolated_points.empty()) {
    s += "; points:";
    for (const auto& p : sd.isolated_points) s += " " + rat_to_string(p);
  }
  return s;
}

}  // namespace

AnBHalf construct_g(const std::vector<PLHomeo>& fs, int max_rounds) {
  IntervalSet a, b;
  for (const auto& f : fs) {
    SignSets s = sign_sets(f, PLHomeo::identity());
    a = a.unite(s.above);
    b = b.unite(s.below);
  }
  if (!(a == b)) {
    SymmetricDifference sd = symmetric_difference(a, b);
    throw Error(ErrorCode::PreconditionViolated,
                "union of above-sets differs from union of below-sets",
                symdiff_detail(sd));
  }
  AnBHalf half;
  if (a.is_empty()) {
    // only identities satisfy A = B = empty
    half.parts.assign(fs.size(), PLHomeo::identity());
    half.product = PLHomeo::identity();
    half.gamma = PLHomeo::identity();
    return half;
  }
  GammaBuilder builder(fs);
  for (int round = 0; round <= max_rounds; ++round) {
    half.gamma = builder.build(a, round);
    half.parts.clear();
    for (size_t i = 0; i < fs.size(); ++i)
      half.parts.push_back(compose(
          builder.plus_parts[i],
          pointwise_max(builder.minus_parts[i], half.gamma)));
    half.product = product_of(half.parts);
    half.rounds = round;
    if (verify_half(fs, half, a)) return half;
  }
  throw Error(ErrorCode::ConstructionFailed,
              "gamma refinement exhausted its round cap",
              "common set: " + a.to_string());
}

AnBHalf construct_h(const std::vector<PLHomeo>& fs, int max_rounds) {
  std::vector<PLHomeo> inverses;
  inverses.reserve(fs.size());
  for (const auto& f : fs) inverses.push_back(invert(f));
  AnBHalf mirrored = construct_g(inverses, max_rounds);
  AnBHalf half;
  half.rounds = mirrored.rounds;
  half.gamma = mirrored.gamma;
  half.parts.reserve(fs.size());
  for (size_t j = fs.size(); j-- > 0;)
    half.parts.push_back(invert(mirrored.parts[j]));
  half.product = invert(mirrored.product);
  // mirrored postconditions, re-checked on the actual outputs: the product
  // sits below the identity exactly on the common set and each part keeps
  // the crossing sets of its (index-reversed) input
  IntervalSet a;
  for (const auto& f : fs) a = a.unite(above_set(f));
  bool ok = above_set(half.product).is_empty() &&
            below_set(half.product) == a;
  for (size_t j = 0; ok && j < fs.size(); ++j) {
    const PLHomeo& source = fs[fs.size() - 1 - j];
    ok = above_set(half.parts[j]) == above_set(source) &&
         below_set(half.parts[j]) == below_set(source);
  }
  if (!ok)
    throw Error(ErrorCode::ConstructionFailed,
                "mirrored construction failed its exact postconditions");
  return half;
}

AnBResult build_anb(const std::vector<PLHomeo>& fs, int max_rounds) {
  AnBHalf g_half = construct_g(fs, max_rounds);
  AnBHalf h_half = construct_h(fs, max_rounds);
  AnBResult result;
  result.g_parts = g_half.parts;
  result.g = g_half.product;
  result.h_parts = h_half.parts;
  result.h = h_half.product;
  result.gamma = g_half.gamma;
  result.rounds = std::max(g_half.rounds, h_half.rounds);
  AnBCertificate cert;
  for (const auto& f : fs) cert.common = cert.common.unite(above_set(f));
  SignSets gs = sign_sets(result.g, PLHomeo::identity());
  SignSets hs = sign_sets(result.h, PLHomeo::identity());
  cert.g_above = gs.above;
  cert.g_below = gs.below;
  cert.h_above = hs.above;
  cert.h_below = hs.below;
  for (const auto& part : result.g_parts) {
    SignSets ps = sign_sets(part, PLHomeo::identity());
    cert.part_above.push_back(ps.above);
    cert.part_below.push_back(ps.below);
  }
  result.certificate = std::move(cert);
  return result;
}

StandardOrdering approximate_typical(const std::vector<PLHomeo>& fs) {
  if (fs.empty())
    throw Error(ErrorCode::PreconditionViolated, "need at least one function");
  for (const auto& f : fs)
    if (f.is_identity())
      throw Error(ErrorCode::PreconditionViolated,
                  "identity inputs are not allowed");
  std::vector<size_t> remaining(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) remaining[i] = i;
  std::vector<Rat> chosen;
  std::map<BigInt, Sign> table;

  auto unions_over = [&](const std::vector<size_t>& idx) {
    std::pair<IntervalSet, IntervalSet> u;
    for (size_t i : idx) {
      SignSets s = sign_sets(fs[i], PLHomeo::identity());
      u.first = u.first.unite(s.above);
      u.second = u.second.unite(s.below);
    }
    return u;
  };
  auto fresh_hit = [&](const SymmetricDifference& sd) {
    std::vector<Rat> iso;
    for (const auto& p : sd.isolated_points)
      if (std::find(chosen.begin(), chosen.end(), p) == chosen.end())
        iso.push_back(p);
    return first_canonical_hit(sd.open_part.minus_points(chosen), iso);
  };

  for (size_t stage = 0; stage < fs.size(); ++stage) {
    auto [ua, ub] = unions_over(remaining);
    SymmetricDifference sd = symmetric_difference(ua, ub);
    if (sd.empty())
      throw Error(ErrorCode::NotJointlyPositivizable,
                  "empty symmetric difference at stage " +
                      std::to_string(stage + 1),
                  "common set: " + ua.to_string());
    std::vector<size_t> pool = remaining;
    IntervalSet up_side = ua;
    auto hit = fresh_hit(sd);
    if (!hit) {
      // Every symmetric-difference point is already a prefix point, so the
      // functions witnessing them are decided; retry over the undecided.
      std::vector<size_t> undecided;
      for (size_t i : remaining) {
        bool moved = false;
        for (const auto& p : chosen)
          if (evaluate(fs[i], p) != p) {
            moved = true;
            break;
          }
        if (!moved) undecided.push_back(i);
      }
      if (!undecided.empty()) {
        auto [ua2, ub2] = unions_over(undecided);
        SymmetricDifference sd2 = symmetric_difference(ua2, ub2);
        if (sd2.empty())
          throw Error(ErrorCode::NotJointlyPositivizable,
                      "empty symmetric difference at stage " +
                          std::to_string(stage + 1),
                      "common set: " + ua2.to_string());
        pool = undecided;
        up_side = ua2;
        hit = fresh_hit(sd2);
      }
    }
    Sign omega = Sign::Positive;
    size_t pick = remaining.front();
    if (hit) {
      // the stage point lies on exactly one side of the pool's unions
      const Rat& x = hit->point;
      omega = up_side.contains(x) ? Sign::Positive : Sign::Negative;
      for (size_t i : pool) {
        const Rat& fx = evaluate(fs[i], x);
        if ((omega == Sign::Positive && fx > x) ||
            (omega == Sign::Negative && fx < x)) {
          pick = i;
          break;
        }
      }
    } else {
      // all remaining functions already decided: pad with a fresh point
      hit = first_canonical_hit(IntervalSet::whole_line().minus_points(chosen));
    }
    chosen.push_back(hit->point);
    table[BigInt(static_cast<unsigned long>(stage))] = omega;
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }

  StandardOrdering ord;
  ord.stream.prefix = chosen;
  ord.stream.region = IntervalSet::whole_line();
  ord.signs.table = std::move(table);
  ord.signs.default_sign = Sign::Positive;
  for (const auto& f : fs)
    if (standard_sign(ord, f) != Sign::Positive)
      throw Error(ErrorCode::ConstructionFailed,
                  "constructed ordering fails to make an input positive");
  return ord;
}

PLHomeo relevance_bump(const Rat& x, const Rat& a) {
  if (a <= 0) throw Error(ErrorCode::InvalidBump, "radius must be positive");
  return pl_bump(x - a, x + a, a / 2);
}

PLHomeo alternating_bump(const std::vector<std::pair<Rat, Rat>>& intervals,
                         Sign start_parity) {
  if (start_parity == Sign::Zero)
    throw Error(ErrorCode::InvalidIntervals, "start parity must be + or -");
  for (const auto& [lo, hi] : intervals)
    if (lo >= hi)
      throw Error(ErrorCode::InvalidIntervals, "intervals must be nonempty");
  for (size_t i = 0; i < intervals.size(); ++i)
    for (size_t k = 0; k < i; ++k) {
      bool disjoint = intervals[i].second <= intervals[k].first ||
                      intervals[k].second <= intervals[i].first;
      if (!disjoint)
        throw Error(ErrorCode::InvalidIntervals, "intervals must be disjoint");
    }
  std::vector<PLHomeo> bumps;
  for (size_t i = 0; i < intervals.size(); ++i) {
    const auto& [lo, hi] = intervals[i];
    bool up = (i % 2 == 0) == (start_parity == Sign::Positive);
    Rat height = (hi - lo) / 4;
    bumps.push_back(pl_bump(lo, hi, up ? height : -height));
  }
  return product_of(bumps);
}

std::pair<PLHomeo, PLHomeo> same_germ_pair(const Rat& x) {
  Rat half(1, 2);
  PLHomeo upper = PLHomeo::from_breaks(
      {{x - 2, x - 2}, {x, x + half}, {x + 2, x + 3}}, 1, 1);
  PLHomeo lower = PLHomeo::from_breaks(
      {{x - 2, x - 2}, {x, x - half}, {x + 2, x + 3}}, 1, 1);
  return {upper, lower};
}

std::pair<PLHomeo, PLHomeo> separating_pair() {
  PLHomeo f = PLHomeo::translation(1);
  PLHomeo g = PLHomeo::from_breaks({{Rat(2), Rat(3)}}, 1, 2);
  return {f, g};
}

}  // namespace plord
