#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plord/error.hpp"
#include "plord/ordering.hpp"
#include "plord/pl_homeo.hpp"
#include "plord/sign.hpp"

namespace plord {

struct ConeViolation {
  enum class Kind { IdentityNotZero, Trichotomy, ProductSign };
  Kind kind;
  std::string description;
  // indices into the sample list involved in the violation (1 or 2)
  std::vector<size_t> witnesses;
};

struct ConeReport {
  size_t samples_checked = 0;
  size_t products_checked = 0;
  std::vector<ConeViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the positive-cone axioms on a sample set: sign(id) = 0; for every
// nontrivial sample exactly one of f, f^-1 is positive (and the other
// negative); products of positive samples are positive. Violations are
// report content, never exceptions.
template <typename Elem>
ConeReport verify_positive_cone(
    const std::function<Sign(const Elem&)>& sign_fn,
    const std::vector<Elem>& samples, const Elem& identity,
    const std::function<Elem(const Elem&, const Elem&)>& multiply,
    const std::function<Elem(const Elem&)>& inverse) {
  ConeReport report;
  report.samples_checked = samples.size();
  if (sign_fn(identity) != Sign::Zero)
    report.violations.push_back({ConeViolation::Kind::IdentityNotZero,
                                 "identity does not have sign Zero",
                                 {}});
  std::vector<Sign> signs(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    signs[i] = sign_fn(samples[i]);
    Sign inv = sign_fn(inverse(samples[i]));
    bool is_id = samples[i] == identity;
    if (is_id) {
      if (signs[i] != Sign::Zero)
        report.violations.push_back({ConeViolation::Kind::IdentityNotZero,
                                     "trivial sample has nonzero sign",
                                     {i}});
      continue;
    }
    if (signs[i] == Sign::Zero || inv != flip(signs[i]))
      report.violations.push_back(
          {ConeViolation::Kind::Trichotomy,
           "need exactly one of f, f^-1 positive for f != id",
           {i}});
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    if (signs[i] != Sign::Positive) continue;
    for (size_t k = 0; k < samples.size(); ++k) {
      if (signs[k] != Sign::Positive) continue;
      ++report.products_checked;
      if (sign_fn(multiply(samples[i], samples[k])) != Sign::Positive)
        report.violations.push_back({ConeViolation::Kind::ProductSign,
                                     "product of positives is not positive",
                                     {i, k}});
    }
  }
  return report;
}

ConeReport verify_positive_cone_pl(const std::function<Sign(const PLHomeo&)>& sign_fn,
                                   const std::vector<PLHomeo>& samples);
ConeReport verify_positive_cone_germ(const GermOrdering& ord,
                                     const std::vector<AffineGerm>& samples);

struct TypicalityMismatch {
  size_t pair_index;
  Sign sign_f;
  Sign sign_g;
};

struct TypicalityReport {
  size_t pairs_checked = 0;
  std::vector<TypicalityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Every pair must satisfy above_set(f) = above_set(g) and
// below_set(f) = below_set(g) exactly; throws Error(InvalidPair) otherwise.
// Each pair with differing signs certifies that sign_fn is not typical.
TypicalityReport typicality_probe(
    const std::function<Sign(const PLHomeo&)>& sign_fn,
    const std::vector<std::pair<PLHomeo, PLHomeo>>& pairs);

}  // namespace plord
