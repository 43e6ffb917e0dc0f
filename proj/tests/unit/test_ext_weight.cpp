#include <doctest.h>

#include <limits>

#include "domtree/ext_weight.hpp"

using domtree::ExtWeight;

TEST_SUITE("ext_weight") {

TEST_CASE("finite values order by units and below infinity") {
  CHECK(ExtWeight::finite(3) < ExtWeight::finite(7));
  CHECK(ExtWeight::finite(7) < ExtWeight::infinity());
  CHECK(ExtWeight::zero() < ExtWeight::infinity());
  CHECK(ExtWeight::infinity() == ExtWeight::infinity());
  CHECK(ExtWeight::finite(5) == ExtWeight::finite(5));
}

TEST_CASE("addition is exact and absorbs infinity") {
  CHECK(ExtWeight::finite(2) + ExtWeight::finite(3) == ExtWeight::finite(5));
  CHECK((ExtWeight::finite(2) + ExtWeight::infinity()).is_infinite());
  CHECK((ExtWeight::infinity() + ExtWeight::infinity()).is_infinite());
}

TEST_CASE("negative weights are rejected") {
  CHECK_THROWS_AS(ExtWeight::finite(-1), std::invalid_argument);
}

TEST_CASE("overflow is an error, not a wrap") {
  ExtWeight big = ExtWeight::finite(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + ExtWeight::finite(1), std::overflow_error);
}

TEST_CASE("units() refuses infinity") {
  CHECK(ExtWeight::finite(9).units() == 9);
  CHECK_THROWS_AS(ExtWeight::infinity().units(), std::logic_error);
}

TEST_CASE("wire form") {
  CHECK(ExtWeight::finite(12).to_string() == "12");
  CHECK(ExtWeight::infinity().to_string() == "inf");
}

}
