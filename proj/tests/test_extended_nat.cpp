#include <doctest.h>

#include "alcor/extended_nat.hpp"

using alcor::ExtendedNat;

TEST_CASE("finite arithmetic and comparisons") {
  CHECK(ExtendedNat(2) + ExtendedNat(3) == ExtendedNat(5));
  CHECK(ExtendedNat(2) + ExtendedNat(3) == ExtendedNat(3) + ExtendedNat(2));
  CHECK((ExtendedNat(1) + ExtendedNat(2)) + ExtendedNat(3) ==
        ExtendedNat(1) + (ExtendedNat(2) + ExtendedNat(3)));
  CHECK(ExtendedNat(5) - ExtendedNat(3) == ExtendedNat(2));
  CHECK(ExtendedNat(0) < ExtendedNat(1));
  CHECK(ExtendedNat(7).to_string() == "7");
}

TEST_CASE("infinity absorbs and dominates") {
  const auto inf = ExtendedNat::infinity();
  CHECK(inf + ExtendedNat(4) == inf);
  CHECK(ExtendedNat(4) + inf == inf);
  CHECK(inf - ExtendedNat(1000) == inf);
  CHECK(ExtendedNat(1'000'000'000) < inf);
  CHECK(!(inf < inf));
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("weight times violation count") {
  const auto inf = ExtendedNat::infinity();
  CHECK(inf * 0 == ExtendedNat(0));  // a satisfied axiom costs nothing
  CHECK(inf * 3 == inf);
  CHECK(ExtendedNat(4) * 3 == ExtendedNat(12));
  CHECK(ExtendedNat(4) * 0 == ExtendedNat(0));
}

TEST_CASE("signed shift") {
  CHECK(alcor::shift(ExtendedNat(3), -1) == ExtendedNat(2));
  CHECK(alcor::shift(ExtendedNat(3), 2) == ExtendedNat(5));
  CHECK(alcor::shift(ExtendedNat::infinity(), -5) == ExtendedNat::infinity());
  CHECK_THROWS_AS(alcor::shift(ExtendedNat(1), -2), alcor::ContractError);
}
