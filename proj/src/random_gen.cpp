#include "plord/random_gen.hpp"

#include <algorithm>

#include "plord/error.hpp"

namespace plord {

long SeededGen::uniform(long lo, long hi) {
  if (lo > hi) throw Error(ErrorCode::ParseError, "bad uniform range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next_u64() % span);
}

Rat SeededGen::rat(long mag, long den_max) {
  return make_rat(uniform(-mag, mag), uniform(1, den_max));
}

Rat SeededGen::rat_between(const Rat& lo, const Rat& hi) {
  long steps = 64;
  long j = uniform(1, steps - 1);
  return lo + (hi - lo) * make_rat(j, steps);
}

std::vector<Rat> SeededGen::distinct_sorted_rats(size_t n, long mag,
                                                 long den_max) {
  std::vector<Rat> out;
  size_t guard = 0;
  while (out.size() < n) {
    Rat r = rat(mag, den_max);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    if (++guard > 64 * n) {
      // widen if the pool is too small for distinctness
      mag *= 2;
      guard = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PLHomeo SeededGen::homeo(int max_breaks, long mag, long den_max) {
  int k = static_cast<int>(uniform(1, max_breaks));
  std::vector<Rat> xs = distinct_sorted_rats(static_cast<size_t>(k), mag, den_max);
  std::vector<Rat> ys = distinct_sorted_rats(static_cast<size_t>(k), mag, den_max);
  std::vector<std::pair<Rat, Rat>> breaks;
  for (int i = 0; i < k; ++i)
    breaks.emplace_back(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(i)]);
  Rat ls = make_rat(uniform(1, 6), uniform(1, 4));
  Rat rs = make_rat(uniform(1, 6), uniform(1, 4));
  return PLHomeo::from_breaks(std::move(breaks), ls, rs);
}

std::vector<std::pair<Rat, Rat>> SeededGen::disjoint_intervals(int count,
                                                               long mag) {
  std::vector<Rat> ends =
      distinct_sorted_rats(static_cast<size_t>(2 * count), mag, 6);
  std::vector<std::pair<Rat, Rat>> out;
  for (int i = 0; i < count; ++i)
    out.emplace_back(ends[static_cast<size_t>(2 * i)],
                     ends[static_cast<size_t>(2 * i + 1)]);
  return out;
}

PLHomeo SeededGen::homeo_with_pattern(
    const std::vector<std::pair<std::pair<Rat, Rat>, Sign>>& pattern,
    int max_interior) {
  std::vector<std::pair<Rat, Rat>> breaks;
  for (const auto& [iv, sign] : pattern) {
    const auto& [c, d] = iv;
    breaks.emplace_back(c, c);
    int interior = static_cast<int>(uniform(1, max_interior));
    std::vector<Rat> xs;
    {
      // interior x's by repeated dyadic picks
      Rat lo = c;
      for (int i = 0; i < interior; ++i) {
        Rat x = rat_between(lo, d);
        xs.push_back(x);
        lo = x;
      }
    }
    Rat prev_y = c;
    for (const auto& x : xs) {
      Rat y = sign == Sign::Positive
                  ? rat_between(std::max(prev_y, x), d)
                  : rat_between(std::max(prev_y, c), x);
      breaks.emplace_back(x, y);
      prev_y = y;
    }
    breaks.emplace_back(d, d);
  }
  return PLHomeo::from_breaks(std::move(breaks), 1, 1);
}

std::pair<PLHomeo, PLHomeo> SeededGen::matched_pair() {
  int m = static_cast<int>(uniform(1, 3));
  auto intervals = disjoint_intervals(m);
  std::vector<std::pair<std::pair<Rat, Rat>, Sign>> pattern;
  for (const auto& iv : intervals)
    pattern.emplace_back(iv, coin() ? Sign::Positive : Sign::Negative);
  return {homeo_with_pattern(pattern), homeo_with_pattern(pattern)};
}

StandardOrdering SeededGen::standard_ordering(int max_prefix) {
  StandardOrdering o;
  o.stream.region = IntervalSet::whole_line();
  int n = static_cast<int>(uniform(0, max_prefix));
  if (n > 0)
    o.stream.prefix = distinct_sorted_rats(static_cast<size_t>(n), 20, 4);
  int table_len = static_cast<int>(uniform(0, n + 4));
  for (int i = 0; i < table_len; ++i)
    o.signs.table[BigInt(static_cast<unsigned long>(i))] =
        coin() ? Sign::Positive : Sign::Negative;
  o.signs.default_sign = coin() ? Sign::Positive : Sign::Negative;
  o.validate();
  return o;
}

StagedOrdering SeededGen::staged_ordering(int max_stages) {
  int k = static_cast<int>(uniform(2, max_stages));
  std::vector<Rat> splits =
      distinct_sorted_rats(static_cast<size_t>(k - 1), 10, 3);
  std::vector<IntervalSet> regions;
  regions.push_back(IntervalSet::ray_below(splits.front()));
  for (size_t i = 0; i + 1 < splits.size(); ++i)
    regions.push_back(IntervalSet::segment(splits[i], splits[i + 1]));
  regions.push_back(IntervalSet::ray_above(splits.back()));
  // random stage order
  for (size_t i = regions.size(); i > 1; --i)
    std::swap(regions[i - 1],
              regions[static_cast<size_t>(uniform(0, static_cast<long>(i) - 1))]);
  StagedOrdering o;
  for (auto& region : regions) {
    StagedOrdering::Stage st;
    st.stream.region = region;
    int table_len = static_cast<int>(uniform(0, 3));
    for (int i = 0; i < table_len; ++i)
      st.signs.table[BigInt(static_cast<unsigned long>(i))] =
          coin() ? Sign::Positive : Sign::Negative;
    st.signs.default_sign = coin() ? Sign::Positive : Sign::Negative;
    o.stages.push_back(std::move(st));
  }
  o.validate();
  return o;
}

std::vector<PLHomeo> SeededGen::anb_instance(int max_intervals) {
  int m = static_cast<int>(uniform(1, max_intervals));
  auto intervals = disjoint_intervals(m);
  std::vector<PLHomeo> first_bumps, second_bumps;
  for (size_t i = 0; i < intervals.size(); ++i) {
    const auto& [lo, hi] = intervals[i];
    Rat cap = (hi - lo) / 2;
    Rat h1 = rat_between(Rat(0), cap);
    Rat h2 = rat_between(Rat(0), cap);
    bool first_up = coin();
    first_bumps.push_back(pl_bump(lo, hi, first_up ? h1 : -h1));
    second_bumps.push_back(pl_bump(lo, hi, first_up ? -h2 : h2));
  }
  auto product = [](const std::vector<PLHomeo>& maps) {
    PLHomeo acc = PLHomeo::identity();
    for (const auto& m : maps) acc = compose(acc, m);
    return acc;
  };
  return {product(first_bumps), product(second_bumps)};
}

}  // namespace plord
