#pragma once

#include <optional>
#include <vector>

#include "plord/interval_set.hpp"
#include "plord/rational.hpp"

namespace plord {

// --- Canonical enumeration of Q -------------------------------------------
//
// Term 0 is 0; for k >= 1 with j = ceil(k/2), term k is +r_j when k is odd
// and -r_j when k is even, where r_1 = 1, r_{n+1} = 1/(2 floor(r_n) - r_n + 1)
// is the Calkin-Wilf sequence. The enumeration is a bijection onto Q.
//
// The CW sequence is the breadth-first traversal of the Calkin-Wilf tree in
// heap order: r_j has children r_{2j} = p/(p+q) and r_{2j+1} = (p+q)/q. All
// index computations below exploit this: positions, levels and ranks are
// exact at any magnitude (indices are arbitrary-precision integers).

// Value of the canonical enumeration at index k >= 0.
Rat canonical_rational(const BigInt& k);
Rat canonical_rational(unsigned long k);

// Heap index (>= 1) of a positive rational in the Calkin-Wilf sequence.
BigInt cw_index(const Rat& x);
// Value r_j for j >= 1.
Rat cw_value(const BigInt& j);
// Canonical-enumeration index of an arbitrary rational.
BigInt canonical_index(const Rat& x);

// Sequential enumerator (Newman recurrence); cheap per step.
class CanonicalIter {
 public:
  CanonicalIter() = default;
  // Returns canonical_rational(k) for k = 0, 1, 2, ... in order.
  const Rat& next();
  const BigInt& index() const { return index_of_last_; }

 private:
  Rat current_r_{1};
  Rat last_{0};
  BigInt index_of_last_{-1};
};

// --- Searching and counting ------------------------------------------------

struct StreamHit {
  BigInt index;  // canonical-enumeration index
  Rat point;
};

// Smallest canonical index whose point lies in s or among extra isolated
// points. Exact at any magnitude: interval components are resolved by
// Stern-Brocot descent rather than enumeration. Returns nullopt only when
// both s and extra are empty.
std::optional<StreamHit> first_canonical_hit(
    const IntervalSet& s, const std::vector<Rat>& extra_points = {});

// #{ k < j : canonical_rational(k) in t }.
BigInt canonical_count_below(const BigInt& j, const IntervalSet& t);

// --- Point streams ----------------------------------------------------------

// Deterministic enumeration of a dense subset of `region`: the `prefix`
// points first, then the canonical enumeration filtered to the region,
// skipping points already listed in the prefix.
struct PointStream {
  std::vector<Rat> prefix;
  IntervalSet region;

  // Validates: region nonempty, prefix points distinct and inside region.
  void validate() const;

  // First `n` points of the stream. scan_budget bounds the canonical scan
  // and throws Error(ResourceLimit) when exhausted (desk-scale guard; the
  // comparison engines do not use this path).
  std::vector<Rat> materialize(size_t n, size_t scan_budget = 1u << 20) const;

  // Smallest stream index whose point lies in `target` (exact, jump-based),
  // together with the point. Returns nullopt iff target ∩ region is empty
  // and no prefix point lies in target.
  std::optional<StreamHit> first_index_in(const IntervalSet& target) const;
};

}  // namespace plord
