#include "plord/limits.hpp"

#include <algorithm>

#include "plord/error.hpp"

namespace plord {

namespace {

// Relevant points of one stage in stream order; a stage has either none or
// infinitely many (its region minus the earlier closure is open).
struct StageRelevance {
  const StagedOrdering* ord = nullptr;
  std::vector<IntervalSet> earlier;
  std::vector<std::vector<Rat>> stream_cache;  // raw stream points per stage
  // (point, raw stream index) of the i-th relevant point, or nullopt when
  // the stage has no relevant points at all.
  std::optional<std::pair<Rat, size_t>> relevant_at(size_t stage, size_t i) {
    const IntervalSet& shadow = earlier[stage];
    IntervalSet region = ord->stages[stage].stream.region;
    if (region.minus_closure(shadow).is_empty()) return std::nullopt;
    auto& cache = stream_cache[stage];
    size_t found = 0;
    for (size_t raw = 0;; ++raw) {
      if (cache.size() <= raw)
        cache = ord->stages[stage].stream.materialize(raw + 1);
      if (!shadow.closure_contains(cache[raw])) {
        if (found == i) return std::make_pair(cache[raw], raw);
        ++found;
      }
    }
  }
};

StageRelevance make_relevance(const StagedOrdering& ord) {
  StageRelevance r;
  r.ord = &ord;
  r.earlier.resize(ord.stages.size());
  r.stream_cache.resize(ord.stages.size());
  for (size_t s = 1; s < ord.stages.size(); ++s)
    r.earlier[s] =
        r.earlier[s - 1].unite(ord.stages[s - 1].stream.region);
  return r;
}

}  // namespace

StandardOrdering approximating_sequence(const StagedOrdering& ord, int n) {
  if (n < 1) throw Error(ErrorCode::ParseError, "approximation index must be >= 1");
  ord.validate();
  StageRelevance rel = make_relevance(ord);
  std::vector<bool> live(ord.stages.size());
  for (size_t s = 0; s < ord.stages.size(); ++s)
    live[s] = !ord.stages[s]
                   .stream.region.minus_closure(rel.earlier[s])
                   .is_empty();
  // first n diagonal entries over the live stages
  std::vector<std::pair<size_t, size_t>> picks;  // (stage, relevant index)
  for (size_t diag = 0; picks.size() < static_cast<size_t>(n); ++diag) {
    bool any_live_in_range = false;
    for (size_t s = 0; s <= diag && s < ord.stages.size(); ++s) {
      if (!live[s]) continue;
      any_live_in_range = true;
      picks.emplace_back(s, diag - s);
      if (picks.size() == static_cast<size_t>(n)) break;
    }
    if (!any_live_in_range && diag >= ord.stages.size()) {
      // no live stage at all: cannot happen for a valid staged ordering
      throw Error(ErrorCode::ConstructionFailed,
                  "staged ordering has no relevant points");
    }
  }
  std::sort(picks.begin(), picks.end());  // stage-major = well-order order
  StandardOrdering out;
  out.stream.region = IntervalSet::whole_line();
  out.signs.default_sign = Sign::Positive;
  for (size_t k = 0; k < picks.size(); ++k) {
    auto [stage, idx] = picks[k];
    auto pr = rel.relevant_at(stage, idx);
    if (!pr)
      throw Error(ErrorCode::ConstructionFailed, "live stage lost its points");
    out.stream.prefix.push_back(pr->first);
    Sign s = ord.stages[stage].signs.at(
        BigInt(static_cast<unsigned long>(pr->second)));
    out.signs.table[BigInt(static_cast<unsigned long>(k))] = s;
  }
  return out;
}

StabilizationReport stabilization_probe(const OrderingSequence& seq,
                                        const std::vector<PLHomeo>& tests) {
  if (seq.budget < 1)
    throw Error(ErrorCode::ParseError, "sequence budget must be >= 1");
  StabilizationReport report;
  report.rows.resize(tests.size());
  std::vector<StandardOrdering> ords;
  ords.reserve(static_cast<size_t>(seq.budget));
  for (int i = 1; i <= seq.budget; ++i) ords.push_back(seq.provider(i));
  for (size_t f = 0; f < tests.size(); ++f) {
    auto& row = report.rows[f];
    row.trace.reserve(ords.size());
    for (const auto& o : ords)
      row.trace.push_back(standard_sign(o, tests[f]));
    int window = std::max(1, seq.budget / 4);
    row.stabilized = true;
    for (int i = seq.budget - window; i < seq.budget; ++i)
      if (row.trace[static_cast<size_t>(i)] != row.trace.back())
        row.stabilized = false;
    if (row.stabilized) {
      int first = seq.budget;
      while (first > 1 &&
             row.trace[static_cast<size_t>(first - 2)] == row.trace.back())
        --first;
      row.first_stable = first;
    }
  }
  return report;
}

std::vector<std::optional<LimitPrefixEntry>> limit_prefix(
    const OrderingSequence& seq, size_t m) {
  if (m < 1) throw Error(ErrorCode::ParseError, "prefix length must be >= 1");
  if (seq.budget < 1)
    throw Error(ErrorCode::ParseError, "sequence budget must be >= 1");
  std::vector<std::vector<Rat>> points;   // per provider index
  std::vector<std::vector<Sign>> signs;
  for (int i = 1; i <= seq.budget; ++i) {
    StandardOrdering o = seq.provider(i);
    points.push_back(o.stream.materialize(m));
    std::vector<Sign> row;
    for (size_t k = 0; k < m; ++k)
      row.push_back(o.signs.at(BigInt(static_cast<unsigned long>(k))));
    signs.push_back(std::move(row));
  }
  int window = std::max(1, seq.budget / 4);
  std::vector<std::optional<LimitPrefixEntry>> out(m);
  for (size_t k = 0; k < m; ++k) {
    bool stable = true;
    for (int i = seq.budget - window; i < seq.budget; ++i) {
      if (points[static_cast<size_t>(i)][k] != points.back()[k] ||
          signs[static_cast<size_t>(i)][k] != signs.back()[k])
        stable = false;
    }
    if (stable)
      out[k] = LimitPrefixEntry{points.back()[k], signs.back()[k]};
  }
  return out;
}

}  // namespace plord
