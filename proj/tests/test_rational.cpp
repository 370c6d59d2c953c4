#include <doctest.h>

#include "plord/error.hpp"
#include "plord/rational.hpp"
#include "plord/sign.hpp"

using namespace plord;

TEST_CASE("rationals canonicalize and round-trip as strings") {
  CHECK(rat_to_string(make_rat(-4, 8)) == "-1/2");
  CHECK(rat_to_string(make_rat(5, 1)) == "5");
  CHECK(rat_from_string("7/21") == make_rat(1, 3));
  CHECK(rat_from_string("-3") == make_rat(-3));
  CHECK(rat_to_string(rat_from_string("-22/7")) == "-22/7");
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(rat_from_string(""), Error);
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("1/-2"), Error);
  CHECK_THROWS_AS(rat_from_string("a"), Error);
  CHECK_THROWS_AS(rat_from_string("1.5"), Error);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), Error);
}

TEST_CASE("floor and helpers") {
  CHECK(rat_floor(make_rat(7, 2)) == 3);
  CHECK(rat_floor(make_rat(-7, 2)) == -4);
  CHECK(is_integer(make_rat(8, 4)));
  CHECK(!is_integer(make_rat(1, 3)));
  CHECK(midpoint(make_rat(0), make_rat(1)) == make_rat(1, 2));
}

TEST_CASE("signs parse and flip") {
  CHECK(sign_from_string("+") == Sign::Positive);
  CHECK(sign_from_string("-") == Sign::Negative);
  CHECK_THROWS_AS(sign_from_string("0"), Error);
  CHECK(sign_from_string("0", true) == Sign::Zero);
  CHECK(flip(Sign::Positive) == Sign::Negative);
  CHECK(flip(Sign::Zero) == Sign::Zero);
  CHECK(sign_of_rat(make_rat(-1, 7)) == Sign::Negative);
}
