#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "plord/ordering.hpp"
#include "plord/pl_homeo.hpp"

namespace plord {

// Deterministic draws for the randomized suites. mt19937_64 output is fully
// specified by the standard and the mappings below avoid
// std::uniform_int_distribution, so identical seeds give identical values
// on every platform. Coordinate magnitudes are kept small: witness points
// of comparisons then have short continued fractions, which keeps the
// stream-index machinery in its fast paths.
class SeededGen {
 public:
  explicit SeededGen(uint64_t seed) : rng_(seed) {}

  uint64_t next_u64() { return rng_(); }
  // Inclusive bounds; modulo mapping (bias is irrelevant at these ranges).
  long uniform(long lo, long hi);
  bool coin() { return (next_u64() & 1) != 0; }

  // Numerator in [-mag, mag], denominator in [1, den_max].
  Rat rat(long mag, long den_max);
  // A rational strictly between lo and hi (dyadic subdivision).
  Rat rat_between(const Rat& lo, const Rat& hi);
  // Distinct rationals, sorted increasing.
  std::vector<Rat> distinct_sorted_rats(size_t n, long mag, long den_max);

  // Increasing PL map with up to max_breaks breakpoints.
  PLHomeo homeo(int max_breaks, long mag = 50, long den_max = 8);

  // Disjoint open intervals with gaps, endpoints drawn small.
  std::vector<std::pair<Rat, Rat>> disjoint_intervals(int count, long mag = 30);

  // A map whose above/below sets are exactly the signed pattern given:
  // Positive regions above the diagonal, Negative below, identity elsewhere.
  PLHomeo homeo_with_pattern(
      const std::vector<std::pair<std::pair<Rat, Rat>, Sign>>& pattern,
      int max_interior = 2);

  // Two independent draws over one random pattern: exactly matched
  // above/below sets.
  std::pair<PLHomeo, PLHomeo> matched_pair();

  StandardOrdering standard_ordering(int max_prefix = 4);
  StagedOrdering staged_ordering(int max_stages = 3);

  // Two maps with opposite bump directions per interval; the unions of
  // their above- and below-sets coincide (the AnB hypothesis).
  std::vector<PLHomeo> anb_instance(int max_intervals = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace plord
