#include <doctest.h>

#include "plord/error.hpp"
#include "plord/pl_homeo.hpp"
#include "plord/random_gen.hpp"

using namespace plord;

namespace {
Rat q(long n, long d = 1) { return make_rat(n, d); }
PLHomeo up_bump_02() { return pl_bump(q(0), q(2), q(1, 2)); }
}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(PLHomeo::translation(1), q(0)) == q(1));
  CHECK(evaluate(PLHomeo::identity(), q(5)) == q(5));
  CHECK(evaluate(up_bump_02(), q(1)) == q(3, 2));
  PLHomeo f = PLHomeo::from_breaks({{q(0), q(0)}, {q(1), q(3)}}, q(1, 2), q(4));
  CHECK(evaluate(f, q(-2)) == q(-1));
  CHECK(evaluate(f, q(1, 2)) == q(3, 2));
  CHECK(evaluate(f, q(2)) == q(7));
  CHECK(inverse_evaluate(f, q(7)) == q(2));
  CHECK(inverse_evaluate(f, q(3, 2)) == q(1, 2));
}

TEST_CASE("strict monotonicity on random maps") {
  SeededGen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    PLHomeo f = gen.homeo(6);
    Rat x = gen.rat(80, 8);
    Rat y = x + make_rat(1, gen.uniform(1, 9));
    CHECK(evaluate(f, x) < evaluate(f, y));
    CHECK(evaluate(f, inverse_evaluate(f, x)) == x);
  }
}

TEST_CASE("compose and invert") {
  PLHomeo t1 = PLHomeo::translation(1);
  CHECK(compose(t1, t1) == PLHomeo::translation(2));
  CHECK(invert(t1) == PLHomeo::translation(-1));
  CHECK(invert(PLHomeo::identity()) == PLHomeo::identity());
  CHECK(compose(t1, invert(t1)) == PLHomeo::identity());

  PLHomeo g_sep = PLHomeo::from_breaks({{q(2), q(3)}}, 1, 2);
  CHECK(evaluate(compose(g_sep, t1), q(2)) == q(5));

  PLHomeo down = invert(up_bump_02());
  CHECK(above_set(down).is_empty());
  CHECK(below_set(down) == IntervalSet::segment(q(0), q(2)));
}

TEST_CASE("group laws hold exactly on random maps") {
  SeededGen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    PLHomeo f = gen.homeo(8);
    PLHomeo g = gen.homeo(8);
    PLHomeo h = gen.homeo(8);
    CHECK(compose(f, invert(f)) == PLHomeo::identity());
    CHECK(compose(invert(f), f) == PLHomeo::identity());
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("pointwise max and min") {
  PLHomeo t1 = PLHomeo::translation(1);
  CHECK(pointwise_max(t1, PLHomeo::identity()) == t1);
  PLHomeo f = up_bump_02();
  CHECK(pointwise_max(f, f) == f);
  PLHomeo down = pl_bump(q(0), q(2), q(-1, 2));
  CHECK(pointwise_max(down, PLHomeo::identity()) == PLHomeo::identity());
  CHECK(pointwise_min(down, PLHomeo::identity()) == down);
}

TEST_CASE("plus and minus parts") {
  PLHomeo t1 = PLHomeo::translation(1);
  CHECK(plus_part(t1) == t1);
  CHECK(minus_part(t1) == PLHomeo::identity());
  CHECK(plus_part(PLHomeo::identity()) == PLHomeo::identity());

  PLHomeo mixed = compose(pl_bump(q(0), q(1), q(1, 4)), pl_bump(q(1), q(2), q(-1, 4)));
  CHECK(plus_part(mixed) == pl_bump(q(0), q(1), q(1, 4)));
  CHECK(minus_part(mixed) == pl_bump(q(1), q(2), q(-1, 4)));

  SeededGen gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    PLHomeo f = gen.homeo(8);
    PLHomeo fp = plus_part(f);
    PLHomeo fm = minus_part(f);
    CHECK(compose(fp, fm) == f);
    CHECK(compose(fm, fp) == f);
    CHECK(below_set(fp).is_empty());
    CHECK(above_set(fm).is_empty());
    CHECK(above_set(fp) == above_set(f));
    CHECK(below_set(fm) == below_set(f));
  }
}

TEST_CASE("above and below sets") {
  CHECK(above_set(PLHomeo::translation(1)) == IntervalSet::whole_line());
  CHECK(below_set(PLHomeo::translation(1)).is_empty());
  CHECK(above_set(PLHomeo::identity()).is_empty());
  CHECK(below_set(PLHomeo::identity()).is_empty());
  CHECK(above_set(up_bump_02()) == IntervalSet::segment(q(0), q(2)));
  CHECK(below_set(up_bump_02()).is_empty());

  SeededGen gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    PLHomeo f = gen.homeo(8);
    CHECK(above_set(f).intersect(below_set(f)).is_empty());
    CHECK(above_set(invert(f)) == below_set(f));
    CHECK(below_set(invert(f)) == above_set(f));
  }
}

TEST_CASE("difference sets, directly and via composition") {
  PLHomeo t1 = PLHomeo::translation(1);
  CHECK(difference_set(t1, t1).is_empty());
  CHECK(difference_set(t1, PLHomeo::identity()) == IntervalSet::whole_line());
  CHECK(difference_set(up_bump_02(), PLHomeo::identity()) ==
        IntervalSet::segment(q(0), q(2)));

  SeededGen gen(19);
  for (int trial = 0; trial < 100; ++trial) {
    PLHomeo f = gen.homeo(6);
    PLHomeo g = gen.homeo(6);
    PLHomeo rel = compose(invert(g), f);  // f(x) != g(x) iff rel moves x
    CHECK(difference_set(f, g) ==
          above_set(rel).unite(below_set(rel)));
  }
}

TEST_CASE("bump construction") {
  PLHomeo b = up_bump_02();
  CHECK(evaluate(b, q(1)) == q(3, 2));
  CHECK(above_set(b) == IntervalSet::segment(q(0), q(2)));
  CHECK_THROWS_AS(pl_bump(q(0), q(2), q(0)), Error);
  CHECK_THROWS_AS(pl_bump(q(0), q(2), q(1)), Error);
  CHECK_THROWS_AS(pl_bump(q(2), q(0), q(1, 4)), Error);
  PLHomeo m = pl_bump(q(-2), q(-1), q(-1, 4));
  CHECK(below_set(m) == IntervalSet::segment(q(-2), q(-1)));
  CHECK(above_set(m).is_empty());
  CHECK(evaluate(m, q(-2)) == q(-2));
}

TEST_CASE("germs at infinity") {
  CHECK(germ_at_infinity(PLHomeo::translation(1)) == AffineGerm{1, 1});
  CHECK(germ_at_infinity(up_bump_02()) == AffineGerm{1, 0});
  CHECK(germ_at_infinity(up_bump_02()).is_trivial());
  PLHomeo g_sep = PLHomeo::from_breaks({{q(2), q(3)}}, 1, 2);
  CHECK(germ_at_infinity(g_sep) == AffineGerm{q(2), q(-1)});

  SeededGen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    PLHomeo f = gen.homeo(6);
    PLHomeo g = gen.homeo(6);
    AffineGerm lhs = germ_at_infinity(compose(f, g));
    AffineGerm rhs = compose(germ_at_infinity(f), germ_at_infinity(g));
    CHECK(lhs == rhs);
    AffineGerm gi = compose(germ_at_infinity(f), invert(germ_at_infinity(f)));
    CHECK(gi.is_trivial());
  }
}

TEST_CASE("normal form anchors affine maps and rejects bad data") {
  PLHomeo viaBreaks =
      PLHomeo::from_breaks({{q(-3), q(-2)}, {q(4), q(5)}}, 1, 1);
  CHECK(viaBreaks == PLHomeo::translation(1));
  CHECK_THROWS_AS(PLHomeo::from_breaks({{q(0), q(0)}, {q(0), q(1)}}, 1, 1), Error);
  CHECK_THROWS_AS(PLHomeo::from_breaks({{q(0), q(1)}, {q(1), q(0)}}, 1, 1), Error);
  CHECK_THROWS_AS(PLHomeo::from_breaks({{q(0), q(0)}}, q(-1), 1), Error);
  CHECK_THROWS_AS(PLHomeo::affine(q(0), q(1)), Error);
}
