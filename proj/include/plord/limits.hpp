#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plord/ordering.hpp"

namespace plord {

// Deterministic sequence of standard orderings, indexed 1..budget.
struct OrderingSequence {
  std::function<StandardOrdering(int)> provider;
  int budget = 0;
};

// The n-th finite-agreement approximation of a staged ordering: a standard
// ordering whose prefix consists of the first n entries of the diagonal
// enumeration of (stage, relevant-point index), listed stage-major (the
// order the staged well-order induces), with the stage signs copied; the
// continuation is canonical with default sign +. Stages whose region lies
// in the closure of the earlier regions contribute no relevant points and
// are skipped.
StandardOrdering approximating_sequence(const StagedOrdering& ord, int n);

struct StabilizationRow {
  std::vector<Sign> trace;          // sign at provider index 1..budget
  bool stabilized = false;          // constant over the final quarter window
  std::optional<int> first_stable;  // earliest index from which constant
};

struct StabilizationReport {
  std::vector<StabilizationRow> rows;  // parallel to the test functions
};

// Sign trace of each test function against the identity along the sequence.
// Never claims divergence: a row that keeps flipping is merely reported as
// not stabilized within the budget.
StabilizationReport stabilization_probe(const OrderingSequence& seq,
                                        const std::vector<PLHomeo>& tests);

struct LimitPrefixEntry {
  Rat point;
  Sign sign;
};

// Positions 1..m of the providers' stream prefixes: the eventually-constant
// point and sign when the final quarter of the budget window is constant,
// nullopt (not stabilized) otherwise. Finite evidence only.
std::vector<std::optional<LimitPrefixEntry>> limit_prefix(
    const OrderingSequence& seq, size_t m);

}  // namespace plord
