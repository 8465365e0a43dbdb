#include "wnbuild/rational.hpp"

#include <doctest.h>

using wnbuild::Rat;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 5) + Rat(1, 4) == Rat(9, 20));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(7, 7) == Rat::whole(1));
}

TEST_CASE("decimal rendering rounds half up") {
  CHECK(Rat(1, 2).to_decimal(4) == "0.5000");
  CHECK(Rat(1, 3).to_decimal(4) == "0.3333");
  CHECK(Rat(2, 3).to_decimal(4) == "0.6667");
  CHECK(Rat(1, 1).to_decimal(4) == "1.0000");
  CHECK(Rat(0, 1).to_decimal(4) == "0.0000");
  CHECK(Rat(7, 8).to_decimal(2) == "0.88");
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}
