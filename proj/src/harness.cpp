#include "plord/harness.hpp"

namespace plord {

ConeReport verify_positive_cone_pl(
    const std::function<Sign(const PLHomeo&)>& sign_fn,
    const std::vector<PLHomeo>& samples) {
  return verify_positive_cone<PLHomeo>(
      sign_fn, samples, PLHomeo::identity(),
      [](const PLHomeo& a, const PLHomeo& b) { return compose(a, b); },
      [](const PLHomeo& a) { return invert(a); });
}

ConeReport verify_positive_cone_germ(const GermOrdering& ord,
                                     const std::vector<AffineGerm>& samples) {
  return verify_positive_cone<AffineGerm>(
      [&ord](const AffineGerm& g) { return germ_sign(ord, g); }, samples,
      AffineGerm{1, 0},
      [](const AffineGerm& a, const AffineGerm& b) { return compose(a, b); },
      [](const AffineGerm& a) { return invert(a); });
}

TypicalityReport typicality_probe(
    const std::function<Sign(const PLHomeo&)>& sign_fn,
    const std::vector<std::pair<PLHomeo, PLHomeo>>& pairs) {
  TypicalityReport report;
  report.pairs_checked = pairs.size();
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f, g] = pairs[i];
    if (!(above_set(f) == above_set(g)) || !(below_set(f) == below_set(g)))
      throw Error(ErrorCode::InvalidPair,
                  "pair " + std::to_string(i) + " is not A/B-matched");
    Sign sf = sign_fn(f);
    Sign sg = sign_fn(g);
    if (sf != sg) report.mismatches.push_back({i, sf, sg});
  }
  return report;
}

}  // namespace plord
