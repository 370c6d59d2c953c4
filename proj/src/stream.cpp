#include "plord/stream.hpp"

#include <algorithm>
#include <cstddef>

#include "plord/error.hpp"

namespace plord {

namespace {

// Path runs in the Calkin-Wilf tree: (bit, count), bit 0 = left child
// p/q -> p/(p+q), bit 1 = right child p/q -> (p+q)/q.
std::vector<std::pair<int, BigInt>> path_runs_of(const Rat& x) {
  BigInt p = x.get_num(), q = x.get_den();
  std::vector<std::pair<int, BigInt>> runs;  // leaf-to-root order
  while (!(p == 1 && q == 1)) {
    if (p > q) {
      BigInt t = (q == 1) ? BigInt(p - 1) : BigInt(p / q);
      runs.emplace_back(1, t);
      p -= t * q;
    } else {
      BigInt t = (p == 1) ? BigInt(q - 1) : BigInt(q / p);
      runs.emplace_back(0, t);
      q -= t * p;
    }
  }
  std::reverse(runs.begin(), runs.end());
  return runs;
}

BigInt level_from_runs(const std::vector<std::pair<int, BigInt>>& runs) {
  BigInt level = 0;
  for (const auto& [bit, count] : runs) level += count;
  return level;
}

BigInt index_from_runs(const std::vector<std::pair<int, BigInt>>& runs) {
  BigInt total = level_from_runs(runs);
  // the heap index has level+1 bits; beyond ~2^31 it is not materializable
  if (!total.fits_ulong_p() || total.get_ui() > (1ul << 31))
    throw Error(ErrorCode::ResourceLimit,
                "enumeration index too deep to materialize");
  BigInt j = 1;
  for (const auto& [bit, count] : runs) {
    unsigned long c = count.get_ui();
    j <<= c;
    if (bit) j += (BigInt(1) << c) - 1;
  }
  return j;
}

}  // namespace

BigInt cw_index(const Rat& x) {
  if (x <= 0) throw Error(ErrorCode::ParseError, "cw_index needs x > 0");
  return index_from_runs(path_runs_of(x));
}

Rat cw_value(const BigInt& j) {
  if (j < 1) throw Error(ErrorCode::ParseError, "cw_value needs j >= 1");
  size_t bits = mpz_sizeinbase(j.get_mpz_t(), 2);
  BigInt p = 1, q = 1;
  // bits below the leading one, MSB first, with run batching
  size_t i = bits - 1;
  while (i > 0) {
    int bit = mpz_tstbit(j.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1));
    size_t run = 1;
    while (i - run > 0 &&
           mpz_tstbit(j.get_mpz_t(), static_cast<mp_bitcnt_t>(i - run - 1)) ==
               bit)
      ++run;
    if (bit)
      p += q * static_cast<unsigned long>(run);
    else
      q += p * static_cast<unsigned long>(run);
    i -= run;
  }
  return make_rat(p, q);
}

Rat canonical_rational(const BigInt& k) {
  if (k < 0) throw Error(ErrorCode::ParseError, "canonical index must be >= 0");
  if (k == 0) return Rat(0);
  BigInt j = (k + 1) / 2;
  Rat r = cw_value(j);
  return mpz_odd_p(k.get_mpz_t()) ? r : Rat(-r);
}

Rat canonical_rational(unsigned long k) { return canonical_rational(BigInt(k)); }

BigInt canonical_index(const Rat& x) {
  if (x == 0) return 0;
  if (x > 0) return 2 * cw_index(x) - 1;
  return 2 * cw_index(-x);
}

const Rat& CanonicalIter::next() {
  index_of_last_ += 1;
  if (index_of_last_ == 0) {
    last_ = 0;
    return last_;
  }
  if (mpz_odd_p(index_of_last_.get_mpz_t())) {
    last_ = current_r_;
  } else {
    last_ = -current_r_;
    // Newman recurrence advances to the next Calkin-Wilf term
    Rat fl(rat_floor(current_r_));
    current_r_ = 1 / (2 * fl - current_r_ + 1);
  }
  return last_;
}

namespace {

// --- positive-side component ------------------------------------------------

struct PosComp {
  Rat lo;                  // >= 0
  std::optional<Rat> hi;   // nullopt = +inf
  bool contains(const Rat& x) const { return lo < x && (!hi || x < *hi); }
};

std::vector<PosComp> positive_components(const IntervalSet& s) {
  std::vector<PosComp> out;
  IntervalSet positive = s.intersect(IntervalSet::ray_above(0));
  for (const auto& iv : positive.parts()) {
    PosComp c;
    c.lo = iv.lo ? *iv.lo : Rat(0);
    c.hi = iv.hi;
    out.push_back(std::move(c));
  }
  return out;
}

// Stern-Brocot descent to the unique minimal-level element of the open
// interval (lo, hi) in (0, inf). Quotient-batched; exact. Returns the
// element and its tree level (root = level 0).
std::pair<Rat, BigInt> sb_simplest_in(const PosComp& comp) {
  BigInt p0 = 0, q0 = 1;  // left fraction
  BigInt p1 = 1, q1 = 0;  // right fraction (1/0 = inf)
  BigInt level = 0;
  const BigInt an = comp.lo.get_num(), ad = comp.lo.get_den();
  for (;;) {
    BigInt mp = p0 + p1, mq = q0 + q1;
    // mediant <= lo: batch right steps
    if (mp * ad <= an * mq) {
      // largest t with (p0 + t p1) ad <= an (q0 + t q1)
      BigInt c = p1 * ad - an * q1;  // > 0 since right fraction > lo
      BigInt d = an * q0 - p0 * ad;
      BigInt t;
      mpz_fdiv_q(t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
      if (t < 1) t = 1;
      p0 += t * p1;
      q0 += t * q1;
      level += t;
      continue;
    }
    // mediant >= hi: batch left steps
    if (comp.hi) {
      const BigInt bn = comp.hi->get_num(), bd = comp.hi->get_den();
      if (mp * bd >= bn * mq) {
        // largest t with (t p0 + p1) bd >= bn (t q0 + q1)
        BigInt c = bn * q0 - p0 * bd;  // > 0 since left fraction < hi
        BigInt d = p1 * bd - bn * q1;
        BigInt t;
        mpz_fdiv_q(t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
        if (t < 1) t = 1;
        p1 += t * p0;
        q1 += t * q0;
        level += t;
        continue;
      }
    }
    return {make_rat(mp, mq), level};
  }
}

// --- Calkin-Wilf subtree counting -------------------------------------------
//
// A node at Calkin-Wilf level d is B_{w_d}(...B_{w_1}(1)...) for its path
// word w, with B_0 = L: x -> x/(x+1) and B_1 = R: x -> x+1. The set of
// level-d values is therefore { M.v : M a length-d product of the matrices
// L = [[1,0],[1,1]], R = [[1,1],[0,1]] } applied to the base value v (v = 1
// for the whole tree; v = a subtree root when counting within a subtree).
// Products are enumerated by a prefix tree whose node M has children M.L
// and M.R; the values below M lie strictly inside the open span
// (M.0, M.inf) = (b/d, a/c), and sibling spans meet only at endpoints, so
// interval pruning visits O(depth) nodes per component endpoint.

struct Mat {
  BigInt a, b, c, d;
};

const Mat kIdentityMat{1, 0, 0, 1};

Mat mat_times_l(const Mat& m) { return Mat{m.a + m.b, m.b, m.c + m.d, m.d}; }
Mat mat_times_r(const Mat& m) { return Mat{m.a, m.a + m.b, m.c, m.c + m.d}; }

Rat mat_apply(const Mat& m, const Rat& v) {
  return make_rat(m.a * v.get_num() + m.b * v.get_den(),
                  m.c * v.get_num() + m.d * v.get_den());
}

// span low = b/d (d >= 1 always), span high = a/c (c == 0 means +inf)
bool span_inside(const Mat& m, const PosComp& comp) {
  bool lo_ok = m.b * comp.lo.get_den() >= comp.lo.get_num() * m.d;
  if (!lo_ok) return false;
  if (!comp.hi) return true;
  if (m.c == 0) return false;
  return m.a * comp.hi->get_den() <= comp.hi->get_num() * m.c;
}
BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool in_comps(const Rat& v, const std::vector<PosComp>& comps) {
  for (const auto& comp : comps)
    if (comp.contains(v)) return true;
  return false;
}

// Finite component bounds, sorted. An endpoint strictly inside a node span
// is what forces descent; everything else resolves to closed forms.
std::vector<Rat> comp_endpoints(const std::vector<PosComp>& comps) {
  std::vector<Rat> out;
  for (const auto& c : comps) {
    if (c.lo > 0) out.push_back(c.lo);
    if (c.hi) out.push_back(*c.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// #{ length-r words M : M.base in comps }, or with exact_depth = false the
// same summed over word lengths 0..r.
//
// Straddle paths are walked with quotient batching: while every in-span
// endpoint sits on one side of the subdivision value, the walk jumps a full
// run of same-direction steps at once and adds the skipped sibling
// subtrees by geometric closed form. Runs are bounded by the endpoints'
// continued-fraction length, so the cost is polynomial in the input size
// no matter how large r is.
BigInt count_values_at_depth(unsigned long r, const Rat& base,
                             const std::vector<PosComp>& comps,
                             bool exact_depth) {
  if (comps.empty()) return 0;
  // the batched run bookkeeping identifies node values with subdivision
  // points, which is only valid from the tree root
  if (!exact_depth && base != 1)
    throw Error(ErrorCode::ConstructionFailed,
                "cumulative-depth counting requires the root base");
  std::vector<Rat> endpoints = comp_endpoints(comps);
  auto full_count = [&](unsigned long d) -> BigInt {
    return exact_depth ? pow2(d) : pow2(d + 1) - 1;
  };
  BigInt total = 0;
  std::vector<std::pair<Mat, unsigned long>> work;
  work.emplace_back(kIdentityMat, r);
  while (!work.empty()) {
    Mat m = std::move(work.back().first);
    unsigned long d = work.back().second;
    work.pop_back();
    for (;;) {
      std::vector<const Rat*> inside;
      for (const auto& e : endpoints) {
        bool above_lo = e.get_num() * m.d > m.b * e.get_den();
        bool below_hi =
            m.c == 0 || e.get_num() * m.c < m.a * e.get_den();
        if (above_lo && below_hi) inside.push_back(&e);
      }
      if (inside.empty()) {
        // span within one uniform region: inside a component or outside all
        for (const auto& comp : comps)
          if (span_inside(m, comp)) {
            total += full_count(d);
            break;
          }
        break;
      }
      if (d == 0) {
        if (in_comps(mat_apply(m, base), comps)) total += 1;
        break;
      }
      BigInt vp = m.a + m.b, vq = m.c + m.d;  // subdivision value vp/vq
      bool any_below = false, any_above = false, any_equal = false;
      for (const Rat* e : inside) {
        int c = cmp(e->get_num() * vq, vp * e->get_den());
        if (c < 0) any_below = true;
        else if (c > 0) any_above = true;
        else any_equal = true;
      }
      if (any_equal || (any_below && any_above)) {
        // the subdivision separates the endpoints: genuine branch
        if (!exact_depth && in_comps(make_rat(vp, vq), comps)) total += 1;
        work.emplace_back(mat_times_r(m), d - 1);
        m = mat_times_l(m);
        d -= 1;
        continue;
      }
      bool step_left = any_below;
      const Rat* alpha = inside.front();  // binding endpoint for the run
      for (const Rat* e : inside)
        if (step_left ? (*e > *alpha) : (*e < *alpha)) alpha = e;
      const BigInt an = alpha->get_num(), ad = alpha->get_den();
      BigInt t_cap;  // largest t keeping alpha strictly inside after t steps
      if (step_left)
        t_cap = (ad * m.a - an * m.c - 1) / (an * m.d - ad * m.b);
      else
        t_cap = (an * m.d - ad * m.b - 1) / (ad * m.a - an * m.c);
      unsigned long t =
          t_cap < static_cast<long>(d) ? t_cap.get_ui()
                                       : d;  // d fits; t_cap >= 1 by the test
      Mat off = step_left ? mat_times_r(m) : mat_times_l(m);
      bool off_in = false;
      for (const auto& comp : comps)
        if (span_inside(off, comp)) {
          off_in = true;
          break;
        }
      if (off_in) {
        // skipped siblings plus, below exact depth, their root values
        if (exact_depth)
          total += pow2(d) - pow2(d - t);
        else
          total += pow2(d + 1) - pow2(d - t + 1);
      }
      BigInt tb(static_cast<unsigned long>(t));
      if (step_left) {
        m.a += tb * m.b;
        m.c += tb * m.d;
      } else {
        m.b += tb * m.a;
        m.d += tb * m.c;
      }
      d -= t;
      if (d == 0) {
        if (in_comps(mat_apply(m, base), comps)) total += 1;
        break;
      }
    }
  }
  return total;
}

// Value of the node reached from the root by the first `take` bits of the
// level-bit position word, MSB first; run-batched.
Rat descend_path_value(const BigInt& positions, unsigned long level,
                       unsigned long take) {
  BigInt num = 1, den = 1;
  unsigned long i = 0;
  while (i < take) {
    int bit = mpz_tstbit(positions.get_mpz_t(),
                         static_cast<mp_bitcnt_t>(level - 1 - i));
    unsigned long run = 1;
    while (i + run < take &&
           mpz_tstbit(positions.get_mpz_t(),
                      static_cast<mp_bitcnt_t>(level - 1 - i - run)) == bit)
      ++run;
    if (bit)
      num += BigInt(run) * den;  // v -> v + run
    else
      den += BigInt(run) * num;  // v -> v / (run v + 1)
    i += run;
  }
  return make_rat(num, den);
}

// #{ level-L nodes with position < P and value in comps }, positions in
// Calkin-Wilf (heap) order, 0 <= P <= 2^L.
//
// Beyond the endpoints' depth the skipped-subtree counts stop depending on
// the path value (every straddle walk closes before exhausting its budget),
// so they are linear in 2^depth; the whole deep part of the walk collapses
// to one multiplication by the path word. Only the last few bits are walked
// with real subtree counts.
BigInt cw_prefix_count(unsigned long level, const BigInt& positions,
                       const std::vector<PosComp>& comps) {
  if (comps.empty()) return 0;
  if (positions >= pow2(level))
    return count_values_at_depth(level, Rat(1), comps, true);
  unsigned long dstar = 2;
  bool dstar_ok = true;
  for (const Rat& e : comp_endpoints(comps)) {
    BigInt lvl = level_from_runs(path_runs_of(e));
    if (!lvl.fits_ulong_p() || lvl.get_ui() > level) {
      dstar_ok = false;
      break;
    }
    dstar = std::max(dstar, lvl.get_ui() + 2);
  }
  BigInt total = 0;
  unsigned long shallow_from = 0;
  Rat v(1);
  if (dstar_ok && level > dstar + 64) {
    BigInt w_scaled = count_values_at_depth(dstar, Rat(1), comps, true);
    total += w_scaled * (positions >> dstar);
    shallow_from = level - dstar;
    v = descend_path_value(positions, level, shallow_from);
  }
  for (unsigned long i = shallow_from; i < level; ++i) {
    int bit = mpz_tstbit(positions.get_mpz_t(),
                         static_cast<mp_bitcnt_t>(level - 1 - i));
    Rat left_child = make_rat(v.get_num(), v.get_den() + v.get_num());
    if (bit) {
      total += count_values_at_depth(level - 1 - i, left_child, comps, true);
      v += 1;
    } else {
      v = std::move(left_child);
    }
  }
  return total;
}

// #{ 1 <= i <= last : r_i in comps }
BigInt cw_count_upto(const BigInt& last, const std::vector<PosComp>& comps) {
  if (last < 1 || comps.empty()) return 0;
  size_t bits = mpz_sizeinbase(last.get_mpz_t(), 2);
  unsigned long level = static_cast<unsigned long>(bits - 1);
  BigInt total = 0;
  if (level > 0)
    total = count_values_at_depth(level - 1, Rat(1), comps, false);
  BigInt positions = last - pow2(level) + 1;
  total += cw_prefix_count(level, positions, comps);
  return total;
}

constexpr unsigned long kDirectScanLimit = 4096;

}  // namespace

std::optional<StreamHit> first_canonical_hit(const IntervalSet& s,
                                             const std::vector<Rat>& extra) {
  auto in_target = [&](const Rat& x) {
    if (s.contains(x)) return true;
    for (const auto& p : extra)
      if (p == x) return true;
    return false;
  };
  if (s.is_empty() && extra.empty()) return std::nullopt;
  // Cheap scan first; typical hits are early.
  CanonicalIter iter;
  for (unsigned long k = 0; k < 128; ++k) {
    const Rat& x = iter.next();
    if (in_target(x)) return StreamHit{BigInt(k), x};
  }
  // Jump search: per-component Stern-Brocot descent on each side.
  std::optional<StreamHit> best;
  auto offer = [&](BigInt idx, Rat pt) {
    if (!best || idx < best->index) best = StreamHit{std::move(idx), std::move(pt)};
  };
  if (in_target(Rat(0))) offer(BigInt(0), Rat(0));
  struct Cand {
    Rat value;
    BigInt level;
  };
  auto side_best = [&](const IntervalSet& set, bool negative) {
    std::vector<Cand> cands;
    for (const auto& comp : positive_components(set)) {
      auto [v, lvl] = sb_simplest_in(comp);
      cands.push_back({std::move(v), std::move(lvl)});
    }
    for (const auto& p : extra) {
      Rat q = negative ? Rat(-p) : p;
      if (q > 0) cands.push_back({q, level_from_runs(path_runs_of(q))});
    }
    if (cands.empty()) return;
    BigInt min_level = cands[0].level;
    for (const auto& c : cands) min_level = std::min(min_level, c.level);
    std::optional<BigInt> best_j;
    Rat best_v;
    for (const auto& c : cands) {
      if (c.level != min_level) continue;
      BigInt j = cw_index(c.value);
      if (!best_j || j < *best_j) {
        best_j = j;
        best_v = c.value;
      }
    }
    if (negative)
      offer(2 * *best_j, -best_v);
    else
      offer(2 * *best_j - 1, best_v);
  };
  side_best(s, false);
  side_best(s.negate(), true);
  return best;
}

namespace {

// T covering the whole line except finitely many points: consecutive parts
// share their endpoints.
bool cofinite_removed_points(const IntervalSet& t, std::vector<Rat>& removed) {
  const auto& parts = t.parts();
  if (parts.empty() || parts.front().lo || parts.back().hi) return false;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!parts[i].hi || !parts[i + 1].lo || *parts[i].hi != *parts[i + 1].lo)
      return false;
    removed.push_back(*parts[i].hi);
  }
  return true;
}

}  // namespace

BigInt canonical_count_below(const BigInt& j, const IntervalSet& t) {
  if (j <= 0 || t.is_empty()) return 0;
  std::vector<Rat> removed;
  if (cofinite_removed_points(t, removed)) {
    // every rational is enumerated exactly once
    BigInt count = j;
    for (const auto& p : removed)
      if (canonical_index(p) < j) count -= 1;
    return count;
  }
  if (j <= kDirectScanLimit) {
    BigInt count = 0;
    CanonicalIter iter;
    unsigned long n = j.get_ui();
    for (unsigned long k = 0; k < n; ++k)
      if (t.contains(iter.next())) count += 1;
    return count;
  }
  BigInt count = t.contains(Rat(0)) ? 1 : 0;
  BigInt i_pos = j / 2;
  BigInt i_neg = (j - 1) / 2;
  count += cw_count_upto(i_pos, positive_components(t));
  count += cw_count_upto(i_neg, positive_components(t.negate()));
  return count;
}

void PointStream::validate() const {
  if (region.is_empty())
    throw Error(ErrorCode::ParseError, "stream region must be nonempty");
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (!region.contains(prefix[i]))
      throw Error(ErrorCode::ParseError,
                  "stream prefix point outside the region: " +
                      rat_to_string(prefix[i]));
    for (size_t k = 0; k < i; ++k)
      if (prefix[k] == prefix[i])
        throw Error(ErrorCode::ParseError, "stream prefix points must be distinct");
  }
}

std::vector<Rat> PointStream::materialize(size_t n, size_t scan_budget) const {
  std::vector<Rat> out;
  out.reserve(n);
  for (const auto& p : prefix) {
    if (out.size() == n) return out;
    out.push_back(p);
  }
  CanonicalIter iter;
  for (size_t step = 0; step < scan_budget && out.size() < n; ++step) {
    const Rat& x = iter.next();
    if (!region.contains(x)) continue;
    bool dup = false;
    for (const auto& p : prefix)
      if (p == x) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(x);
  }
  if (out.size() < n)
    throw Error(ErrorCode::ResourceLimit,
                "stream materialization exceeded its scan budget");
  return out;
}

std::optional<StreamHit> PointStream::first_index_in(
    const IntervalSet& target) const {
  for (size_t i = 0; i < prefix.size(); ++i)
    if (target.contains(prefix[i])) return StreamHit{BigInt(i), prefix[i]};
  IntervalSet continuation_region = region.minus_points(prefix);
  IntervalSet t = continuation_region.intersect(target);
  auto hit = first_canonical_hit(t);
  if (!hit) return std::nullopt;
  BigInt rank = canonical_count_below(hit->index, continuation_region);
  return StreamHit{BigInt(prefix.size()) + rank, hit->point};
}

}  // namespace plord
