#include "plord/ordering.hpp"

#include <algorithm>

#include "plord/error.hpp"

namespace plord {

void SignAssignment::validate() const {
  for (const auto& [k, s] : table) {
    if (k < 0)
      throw Error(ErrorCode::ParseError, "sign table index must be >= 0");
    if (s == Sign::Zero)
      throw Error(ErrorCode::ParseError, "sign table entries must be + or -");
  }
  if (default_sign == Sign::Zero)
    throw Error(ErrorCode::ParseError, "default sign must be + or -");
}

void StandardOrdering::validate() const {
  stream.validate();
  signs.validate();
  if (!stream.region.is_whole_line())
    throw Error(ErrorCode::ParseError,
                "a standard ordering's stream must be dense in the whole line");
}

void StagedOrdering::validate() const {
  if (stages.empty())
    throw Error(ErrorCode::ParseError, "staged ordering needs at least one stage");
  IntervalSet covered;
  for (const auto& st : stages) {
    st.stream.validate();
    st.signs.validate();
    covered = covered.unite(st.stream.region);
  }
  if (!covered.closure_is_whole_line())
    throw Error(ErrorCode::ParseError,
                "stage regions must have dense union in the line");
}

void GermOrdering::validate() const {
  if (variant == Variant::EvalLex) {
    if (points.empty())
      throw Error(ErrorCode::ParseError, "eval_lex needs at least one point");
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t k = 0; k < i; ++k)
        if (points[k] == points[i])
          throw Error(ErrorCode::ParseError, "eval_lex points must be distinct");
  } else if (!points.empty()) {
    throw Error(ErrorCode::ParseError, "eventually_above takes no points");
  }
}

void CompositeOrdering::validate() const {
  germ.validate();
  interior.validate();
}

namespace {

// Sign of f relative to g at a deciding point, modulated by the stream sign.
Sign modulated(const Rat& fx, const Rat& gx, Sign stream_sign) {
  Sign base = fx > gx ? Sign::Positive : Sign::Negative;
  return stream_sign == Sign::Positive ? base : flip(base);
}

}  // namespace

CompareResult compare_standard(const StandardOrdering& ord, const PLHomeo& f,
                               const PLHomeo& g) {
  IntervalSet diff = difference_set(f, g);
  if (diff.is_empty()) return CompareResult{Sign::Zero, std::nullopt, std::nullopt};
  auto hit = ord.stream.first_index_in(diff);
  // The stream is dense in the line and diff is open nonempty.
  if (!hit)
    throw Error(ErrorCode::ConstructionFailed,
                "dense stream missed a nonempty open set");
  Sign s = modulated(evaluate(f, hit->point), evaluate(g, hit->point),
                     ord.signs.at(hit->index));
  return CompareResult{s, hit->index, hit->point};
}

StagedCompareResult compare_staged(const StagedOrdering& ord, const PLHomeo& f,
                                   const PLHomeo& g) {
  IntervalSet diff = difference_set(f, g);
  if (diff.is_empty())
    return StagedCompareResult{Sign::Zero, std::nullopt, std::nullopt};
  for (size_t i = 0; i < ord.stages.size(); ++i) {
    const auto& st = ord.stages[i];
    if (st.stream.region.intersect(diff).is_empty()) continue;
    auto hit = st.stream.first_index_in(diff);
    if (!hit)
      throw Error(ErrorCode::ConstructionFailed,
                  "stage stream missed a set meeting its region");
    Sign s = modulated(evaluate(f, hit->point), evaluate(g, hit->point),
                       st.signs.at(hit->index));
    return StagedCompareResult{s, std::make_pair(i, hit->index), hit->point};
  }
  // Unreachable for valid orderings: the regions' closures cover the line,
  // so a nonempty open set meets some region.
  throw Error(ErrorCode::ConstructionFailed,
              "staged ordering did not decide a nontrivial comparison");
}

Sign germ_sign(const GermOrdering& ord, const AffineGerm& germ) {
  if (ord.variant == GermOrdering::Variant::EventuallyAbove) {
    if (germ.slope != 1)
      return germ.slope > 1 ? Sign::Positive : Sign::Negative;
    return sign_of_rat(germ.offset);
  }
  for (const auto& p : ord.points) {
    Rat d = germ.apply(p) - p;
    if (d != 0) return sign_of_rat(d);
  }
  if (germ.is_trivial()) return Sign::Zero;
  throw Error(ErrorCode::Undecided,
              "eval_lex points cannot separate this germ from the identity");
}

Sign sign_composite(const CompositeOrdering& ord, const PLHomeo& f) {
  AffineGerm germ = germ_at_infinity(f);
  if (!germ.is_trivial()) return germ_sign(ord.germ, germ);
  return standard_sign(ord.interior, f);
}

Sign standard_sign(const StandardOrdering& ord, const PLHomeo& f) {
  return compare_standard(ord, f, PLHomeo::identity()).sign;
}

Sign staged_sign(const StagedOrdering& ord, const PLHomeo& f) {
  return compare_staged(ord, f, PLHomeo::identity()).sign;
}

std::vector<RelevantPoint> relevant_prefix(const StagedOrdering& ord,
                                           size_t count) {
  // Closure of earlier regions, per stage.
  std::vector<IntervalSet> earlier(ord.stages.size());
  for (size_t s = 1; s < ord.stages.size(); ++s)
    earlier[s] = earlier[s - 1].unite(ord.stages[s - 1].stream.region);

  std::vector<std::vector<Rat>> points(ord.stages.size());
  auto point_at = [&](size_t stage, size_t i) -> const Rat& {
    auto& cache = points[stage];
    if (cache.size() <= i)
      cache = ord.stages[stage].stream.materialize(i + 1);
    return cache[i];
  };

  std::vector<RelevantPoint> out;
  out.reserve(count);
  for (size_t diag = 0; out.size() < count; ++diag) {
    for (size_t s = 0; s <= diag && s < ord.stages.size() && out.size() < count;
         ++s) {
      size_t i = diag - s;
      RelevantPoint rp;
      rp.point = point_at(s, i);
      rp.stage = s;
      rp.stream_index = BigInt(static_cast<unsigned long>(i));
      rp.relevant = !earlier[s].closure_contains(rp.point);
      out.push_back(std::move(rp));
    }
  }
  return out;
}

}  // namespace plord
