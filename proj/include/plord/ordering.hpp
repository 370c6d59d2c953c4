#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plord/pl_homeo.hpp"
#include "plord/sign.hpp"
#include "plord/stream.hpp"

namespace plord {

// Sign function over stream indices: a finite table with a default applied
// beyond it. Entries are Positive or Negative, never Zero.
struct SignAssignment {
  std::map<BigInt, Sign> table;
  Sign default_sign = Sign::Positive;

  Sign at(const BigInt& index) const {
    auto it = table.find(index);
    return it == table.end() ? default_sign : it->second;
  }
  void validate() const;
};

// Standard dynamical-lexicographic ordering: a point stream dense in the
// whole line and a sign assignment. f succeeds g when, at the first stream
// point where they differ, f is above g and the sign there is Positive (or
// below g with a Negative sign).
struct StandardOrdering {
  PointStream stream;  // region must be the whole line
  SignAssignment signs;

  void validate() const;
};

// Finitely many region-restricted stages tried in order; the union of the
// stage regions must have dense closure so every nontrivial comparison is
// decided.
struct StagedOrdering {
  struct Stage {
    PointStream stream;
    SignAssignment signs;
  };
  std::vector<Stage> stages;

  void validate() const;
};

// Orderings of the affine-germ group at +inf.
//  - EventuallyAbove: positive iff the germ eventually dominates the
//    identity (slope > 1, or slope 1 with positive offset).
//  - EvalLex: lexicographic comparison of germ(p_i) against p_i over a
//    finite list of sample points.
struct GermOrdering {
  enum class Variant { EventuallyAbove, EvalLex };
  Variant variant = Variant::EventuallyAbove;
  std::vector<Rat> points;  // EvalLex only; distinct

  void validate() const;
};

// Germ ordering first; elements with trivial germ at +inf fall through to
// an interior standard ordering.
struct CompositeOrdering {
  GermOrdering germ;
  StandardOrdering interior;

  void validate() const;
};

struct CompareResult {
  Sign sign = Sign::Zero;
  std::optional<BigInt> witness_index;  // stream index deciding the sign
  std::optional<Rat> witness_point;
};

struct StagedCompareResult {
  Sign sign = Sign::Zero;
  std::optional<std::pair<size_t, BigInt>> witness;  // (stage, stream index)
  std::optional<Rat> witness_point;
};

CompareResult compare_standard(const StandardOrdering& ord, const PLHomeo& f,
                               const PLHomeo& g);
StagedCompareResult compare_staged(const StagedOrdering& ord, const PLHomeo& f,
                                   const PLHomeo& g);

Sign germ_sign(const GermOrdering& ord, const AffineGerm& germ);
Sign sign_composite(const CompositeOrdering& ord, const PLHomeo& f);

// Sign of f against the identity under any of the ordering kinds.
Sign standard_sign(const StandardOrdering& ord, const PLHomeo& f);
Sign staged_sign(const StagedOrdering& ord, const PLHomeo& f);

// The first `count` well-order positions of a staged ordering, paired with
// relevance flags. A point is relevant iff it lies outside the closure of
// the union of all earlier stage regions. Positions are enumerated along
// anti-diagonals of (stage, within-stage index) so every stage is reached
// after finitely many entries; within one diagonal, earlier stages first.
struct RelevantPoint {
  Rat point;
  size_t stage = 0;
  BigInt stream_index{0};
  bool relevant = false;
};
std::vector<RelevantPoint> relevant_prefix(const StagedOrdering& ord,
                                           size_t count);

}  // namespace plord
