#pragma once

#include <map>
#include <string>
#include <vector>

#include "plord/ordering.hpp"
#include "plord/pl_homeo.hpp"
#include "plord/rational.hpp"
#include "plord/sign.hpp"

namespace plord {

// Group elements are words over generators: entry +k means generator k,
// entry -k its inverse (k is 1-based). The empty word is the identity.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);  // e.g. "a^2b^-1", "1" for empty

// Left-ordered group given by generators, a canonical-form key for the word
// problem, and a total left-invariant comparison. Oracles must be pure.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual int generator_count() const = 0;
  // Canonical identifier of the element the word spells; equal elements
  // yield equal keys.
  virtual std::string element_key(const Word& w) const = 0;
  // Left order: Zero exactly when the words spell the same element.
  virtual Sign compare(const Word& u, const Word& v) const = 0;
};

// Z^d with the lexicographic order on exponent vectors (first generator
// dominates).
class ZdLexOracle : public GroupOracle {
 public:
  explicit ZdLexOracle(int dim);
  int generator_count() const override { return dim_; }
  std::string element_key(const Word& w) const override;
  Sign compare(const Word& u, const Word& v) const override;

 private:
  std::vector<long> exponents(const Word& w) const;
  int dim_;
};

// Subgroup of the PL homeomorphisms generated by the given maps, ordered by
// a standard ordering; the word problem is solved by exact normal forms.
class PLSubgroupOracle : public GroupOracle {
 public:
  PLSubgroupOracle(std::vector<PLHomeo> generators, StandardOrdering ordering);
  int generator_count() const override {
    return static_cast<int>(generators_.size());
  }
  std::string element_key(const Word& w) const override;
  Sign compare(const Word& u, const Word& v) const override;
  PLHomeo product(const Word& w) const;

 private:
  std::vector<PLHomeo> generators_;
  StandardOrdering ordering_;
};

// Breadth-first enumeration of the ball of the given radius: identity
// first, then per radius layer each previous word extended by s_1, s_1^-1,
// s_2, ..., deduplicated by element key.
std::vector<Word> enumerate_ball(const GroupOracle& oracle, int radius);

// The order-embedding recursion: t(identity) = 0; a new maximum gets
// max + 1, a new minimum gets min - 1, anything else the midpoint of its
// order neighbors among the already-placed elements.
std::vector<Rat> build_tmap(const GroupOracle& oracle,
                            const std::vector<Word>& elements);

struct RealizationResult {
  std::vector<Word> elements;  // enumeration order, identity first
  std::vector<Rat> t;          // parallel to elements
  // rho per generator (1-based index order), interpolating every known
  // orbit pair (t(h), t(s h)) with slope-1 tails.
  std::vector<PLHomeo> rho;
};

// Throws Error(BallTooSmall) if some generator has fewer than two known
// orbit pairs inside the ball.
RealizationResult realize(const GroupOracle& oracle, int radius);

struct RecoveryViolation {
  std::string kind;  // "order", "sign", "action"
  std::string description;
};

struct RecoveryReport {
  size_t order_pairs_checked = 0;
  size_t sign_checks = 0;
  size_t action_pairs_checked = 0;
  std::vector<RecoveryViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that t preserves the oracle order on all in-ball pairs, that
// sign(t(g)) recovers the oracle sign of g, and that rho(s)(t(h)) = t(s h)
// exactly for all in-ball orbit pairs.
RecoveryReport check_recovery(const RealizationResult& result,
                              const GroupOracle& oracle);

}  // namespace plord
