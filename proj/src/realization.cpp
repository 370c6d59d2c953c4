#include "plord/realization.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "plord/error.hpp"

namespace plord {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    int gen = std::abs(w[i]) - 1;
    s += static_cast<char>('a' + gen % 26);
    if (gen >= 26) s += std::to_string(gen / 26);
    long exp = static_cast<long>(run) * (w[i] > 0 ? 1 : -1);
    if (exp != 1) s += "^" + std::to_string(exp);
    i += run;
  }
  return s;
}

ZdLexOracle::ZdLexOracle(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::ParseError, "dimension must be >= 1");
}

std::vector<long> ZdLexOracle::exponents(const Word& w) const {
  std::vector<long> e(static_cast<size_t>(dim_), 0);
  for (int letter : w) {
    int gen = std::abs(letter) - 1;
    if (gen < 0 || gen >= dim_)
      throw Error(ErrorCode::ParseError, "letter outside the generator range");
    e[static_cast<size_t>(gen)] += letter > 0 ? 1 : -1;
  }
  return e;
}

std::string ZdLexOracle::element_key(const Word& w) const {
  std::string key;
  for (long v : exponents(w)) key += std::to_string(v) + ",";
  return key;
}

Sign ZdLexOracle::compare(const Word& u, const Word& v) const {
  std::vector<long> eu = exponents(u), ev = exponents(v);
  for (size_t i = 0; i < eu.size(); ++i) {
    if (eu[i] != ev[i])
      return eu[i] > ev[i] ? Sign::Positive : Sign::Negative;
  }
  return Sign::Zero;
}

PLSubgroupOracle::PLSubgroupOracle(std::vector<PLHomeo> generators,
                                   StandardOrdering ordering)
    : generators_(std::move(generators)), ordering_(std::move(ordering)) {
  if (generators_.empty())
    throw Error(ErrorCode::ParseError, "need at least one generator");
  ordering_.validate();
}

PLHomeo PLSubgroupOracle::product(const Word& w) const {
  PLHomeo acc = PLHomeo::identity();
  for (int letter : w) {
    int gen = std::abs(letter) - 1;
    if (gen < 0 || gen >= static_cast<int>(generators_.size()))
      throw Error(ErrorCode::ParseError, "letter outside the generator range");
    const PLHomeo& g = generators_[static_cast<size_t>(gen)];
    acc = compose(acc, letter > 0 ? g : invert(g));
  }
  return acc;
}

std::string PLSubgroupOracle::element_key(const Word& w) const {
  PLHomeo p = product(w);
  std::string key = rat_to_string(p.left_slope()) + "|" +
                    rat_to_string(p.right_slope());
  for (const auto& [x, y] : p.breaks())
    key += "|" + rat_to_string(x) + "," + rat_to_string(y);
  return key;
}

Sign PLSubgroupOracle::compare(const Word& u, const Word& v) const {
  return compare_standard(ordering_, product(u), product(v)).sign;
}

std::vector<Word> enumerate_ball(const GroupOracle& oracle, int radius) {
  if (radius < 0) throw Error(ErrorCode::ParseError, "radius must be >= 0");
  std::vector<Word> elements = {Word{}};
  std::unordered_set<std::string> seen = {oracle.element_key(Word{})};
  std::vector<Word> layer = {Word{}};
  for (int r = 0; r < radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= oracle.generator_count(); ++g) {
        for (int letter : {g, -g}) {
          Word ext = w;
          ext.push_back(letter);
          std::string key = oracle.element_key(ext);
          if (seen.insert(key).second) {
            elements.push_back(ext);
            next.push_back(std::move(ext));
          }
        }
      }
    }
    layer = std::move(next);
  }
  return elements;
}

std::vector<Rat> build_tmap(const GroupOracle& oracle,
                            const std::vector<Word>& elements) {
  if (elements.empty() || !elements.front().empty())
    throw Error(ErrorCode::ParseError,
                "element list must start with the identity");
  std::vector<Rat> t(elements.size());
  // indices of placed elements sorted by the group order
  std::vector<size_t> sorted = {0};
  t[0] = 0;
  for (size_t n = 1; n < elements.size(); ++n) {
    // locate the order position among the placed elements
    size_t lo = 0, hi = sorted.size();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      Sign s = oracle.compare(elements[n], elements[sorted[mid]]);
      if (s == Sign::Zero)
        throw Error(ErrorCode::ParseError, "duplicate element in the ball");
      if (s == Sign::Positive)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == 0)
      t[n] = t[sorted.front()] - 1;
    else if (lo == sorted.size())
      t[n] = t[sorted.back()] + 1;
    else
      t[n] = midpoint(t[sorted[lo - 1]], t[sorted[lo]]);
    sorted.insert(sorted.begin() + static_cast<long>(lo), n);
  }
  return t;
}

RealizationResult realize(const GroupOracle& oracle, int radius) {
  if (radius < 1) throw Error(ErrorCode::ParseError, "radius must be >= 1");
  RealizationResult result;
  result.elements = enumerate_ball(oracle, radius);
  result.t = build_tmap(oracle, result.elements);
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < result.elements.size(); ++i)
    index[oracle.element_key(result.elements[i])] = i;
  for (int g = 1; g <= oracle.generator_count(); ++g) {
    std::vector<std::pair<Rat, Rat>> pairs;
    for (size_t i = 0; i < result.elements.size(); ++i) {
      Word sh = {g};
      sh.insert(sh.end(), result.elements[i].begin(),
                result.elements[i].end());
      auto it = index.find(oracle.element_key(sh));
      if (it == index.end()) continue;
      pairs.emplace_back(result.t[i], result.t[it->second]);
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.size() < 2)
      throw Error(ErrorCode::BallTooSmall,
                  "generator " + std::to_string(g) +
                      " has fewer than two orbit pairs in the ball");
    for (size_t i = 1; i < pairs.size(); ++i)
      if (pairs[i - 1].second >= pairs[i].second)
        throw Error(ErrorCode::ConstructionFailed,
                    "orbit data is not strictly increasing");
    result.rho.push_back(PLHomeo::from_breaks(std::move(pairs), 1, 1));
  }
  return result;
}

RecoveryReport check_recovery(const RealizationResult& result,
                              const GroupOracle& oracle) {
  RecoveryReport report;
  const auto& els = result.elements;
  for (size_t i = 0; i < els.size(); ++i) {
    for (size_t k = i + 1; k < els.size(); ++k) {
      ++report.order_pairs_checked;
      Sign s = oracle.compare(els[i], els[k]);
      Sign ts = sign_of_rat(result.t[i] - result.t[k]);
      if (s != ts)
        report.violations.push_back(
            {"order", "t does not preserve the order of " +
                          word_to_string(els[i]) + " vs " +
                          word_to_string(els[k])});
    }
  }
  for (size_t i = 0; i < els.size(); ++i) {
    ++report.sign_checks;
    Sign s = oracle.compare(els[i], Word{});
    if (s != sign_of_rat(result.t[i]))
      report.violations.push_back(
          {"sign", "sign of t(" + word_to_string(els[i]) +
                       ") differs from the group sign"});
  }
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < els.size(); ++i)
    index[oracle.element_key(els[i])] = i;
  for (int g = 1; g <= oracle.generator_count(); ++g) {
    for (size_t i = 0; i < els.size(); ++i) {
      Word sh = {g};
      sh.insert(sh.end(), els[i].begin(), els[i].end());
      auto it = index.find(oracle.element_key(sh));
      if (it == index.end()) continue;
      ++report.action_pairs_checked;
      if (evaluate(result.rho[static_cast<size_t>(g - 1)], result.t[i]) !=
          result.t[it->second])
        report.violations.push_back(
            {"action", "rho(" + std::to_string(g) + ")(t(" +
                           word_to_string(els[i]) + ")) != t(s h)"});
    }
  }
  return report;
}

}  // namespace plord
