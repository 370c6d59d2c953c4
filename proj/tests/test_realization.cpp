#include <doctest.h>

#include "plord/error.hpp"
#include "plord/realization.hpp"

using namespace plord;

namespace {
Rat q(long n, long d = 1) { return make_rat(n, d); }
}  // namespace

TEST_CASE("word rendering") {
  CHECK(word_to_string({}) == "1");
  CHECK(word_to_string({1}) == "a");
  CHECK(word_to_string({1, 1}) == "a^2");
  CHECK(word_to_string({-2}) == "b^-1");
  CHECK(word_to_string({1, -2, -2}) == "ab^-2");
}

TEST_CASE("ball enumeration is breadth-first with deduplication") {
  ZdLexOracle z(1);
  auto ball = enumerate_ball(z, 2);
  std::vector<Word> expect = {{}, {1}, {-1}, {1, 1}, {-1, -1}};
  CHECK(ball == expect);
  CHECK(enumerate_ball(z, 0) == std::vector<Word>{{}});

  ZdLexOracle z2(2);
  auto b2 = enumerate_ball(z2, 1);
  std::vector<Word> expect2 = {{}, {1}, {-1}, {2}, {-2}};
  CHECK(b2 == expect2);
}

TEST_CASE("t-map recursion on Z") {
  ZdLexOracle z(1);
  auto ball = enumerate_ball(z, 2);
  auto t = build_tmap(z, ball);
  std::vector<Rat> expect = {q(0), q(1), q(-1), q(2), q(-2)};
  CHECK(t == expect);

  auto t6 = build_tmap(z, enumerate_ball(z, 6));
  for (size_t i = 0; i < t6.size(); ++i) {
    long k = static_cast<long>((i + 1) / 2);
    CHECK(t6[i] == q(i % 2 == 1 ? k : -k));
  }
}

TEST_CASE("t-map recursion on Z^2 lex") {
  ZdLexOracle z2(2);
  auto ball = enumerate_ball(z2, 1);
  auto t = build_tmap(z2, ball);
  CHECK(t[0] == q(0));
  CHECK(t[1] == q(1));     // a: new maximum
  CHECK(t[2] == q(-1));    // a^-1: new minimum
  CHECK(t[3] == q(1, 2));  // b between 1 and a
  CHECK(t[4] == q(-1, 2)); // b^-1 between a^-1 and 1
}

TEST_CASE("realization of Z recovers the translation") {
  ZdLexOracle z(1);
  RealizationResult r = realize(z, 2);
  REQUIRE(r.rho.size() == 1);
  CHECK(r.rho[0] == PLHomeo::translation(1));
  CHECK(check_recovery(r, z).ok());
}

TEST_CASE("realization of Z^2 lex passes recovery") {
  ZdLexOracle z2(2);
  RealizationResult r = realize(z2, 3);
  auto report = check_recovery(r, z2);
  CHECK(report.ok());
  CHECK(report.order_pairs_checked > 0);
  CHECK(report.action_pairs_checked > 0);
}

TEST_CASE("a corrupted t-map is reported") {
  ZdLexOracle z(1);
  RealizationResult r = realize(z, 3);
  std::swap(r.t[1], r.t[2]);
  auto report = check_recovery(r, z);
  CHECK(!report.ok());
  bool saw_order = false, saw_sign = false;
  for (const auto& v : report.violations) {
    if (v.kind == "order") saw_order = true;
    if (v.kind == "sign") saw_sign = true;
  }
  CHECK(saw_order);
  CHECK(saw_sign);
}

TEST_CASE("PL subgroup oracle embeds order-preservingly") {
  StandardOrdering ord;
  ord.stream.region = IntervalSet::whole_line();
  std::vector<PLHomeo> gens = {PLHomeo::translation(1),
                               pl_bump(q(0), q(1), q(1, 4))};
  PLSubgroupOracle oracle(gens, ord);
  RealizationResult r = realize(oracle, 2);
  auto report = check_recovery(r, oracle);
  CHECK(report.ok());

  // order embedding: the source comparison agrees with sign(t(u) - t(v))
  for (size_t i = 0; i < r.elements.size(); ++i)
    for (size_t k = 0; k < r.elements.size(); ++k) {
      Sign s = compare_standard(ord, oracle.product(r.elements[i]),
                                oracle.product(r.elements[k]))
                   .sign;
      CHECK(s == sign_of_rat(r.t[i] - r.t[k]));
    }

  // re-realized translation agrees with x+1 on all interpolation nodes
  for (size_t i = 0; i < r.elements.size(); ++i) {
    Word sh = {1};
    const Word& h = r.elements[i];
    sh.insert(sh.end(), h.begin(), h.end());
    for (size_t k = 0; k < r.elements.size(); ++k)
      if (oracle.element_key(r.elements[k]) == oracle.element_key(sh))
        CHECK(evaluate(r.rho[0], r.t[i]) == r.t[k]);
  }
}

TEST_CASE("degenerate balls raise BallTooSmall") {
  StandardOrdering ord;
  ord.stream.region = IntervalSet::whole_line();
  PLSubgroupOracle trivial({PLHomeo::identity()}, ord);
  CHECK_THROWS_AS(realize(trivial, 2), Error);
}
