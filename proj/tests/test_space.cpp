#include "coh/space.hpp"

#include <doctest.h>

using namespace coh;

TEST_CASE("YType profile") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    CHECK(sp.totalDim() == 8);  // h^0..h^3 plus 4 odd classes
    CHECK(sp.topPower == 3);
    CHECK(sp.topIntegral == rat(4));
    CHECK(sp.oddDegree == 3);
    CHECK(sp.oddRank == 4);
    CHECK(sp.degreeOf(sp.h(2)) == 4);
    CHECK(sp.degreeOf(sp.e(1)) == 3);
    CHECK(sp.isOdd(sp.f(2)));
    CHECK(!sp.isOdd(sp.h(0)));
    CHECK(sp.letterName(sp.h(3)) == "h3");
    CHECK(sp.letterName(sp.e(1)) == "e1");
    CHECK(sp.letterName(sp.f(2)) == "f2");
}

TEST_CASE("curve profile") {
    SpaceSpec sp = make_space(SpaceKind::CurveType, 1);
    CHECK(sp.totalDim() == 4);  // genus-1 Betti numbers 1,2,1
    CHECK(sp.topPower == 1);
    CHECK(sp.topIntegral == rat(1));
    CHECK(sp.oddDegree == 1);
    CHECK(sp.degreeOf(sp.h(1)) == 2);
}

TEST_CASE("total dimension scales with g") {
    for (int g = 1; g <= 5; ++g) {
        CHECK(make_space(SpaceKind::YType, g).totalDim() == 4 * g);
        CHECK(make_space(SpaceKind::CurveType, g).totalDim() == 2 + 2 * g);
    }
}

TEST_CASE("rejects g = 0") {
    CHECK_THROWS_AS(make_space(SpaceKind::YType, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_space(SpaceKind::CurveType, -1), std::invalid_argument);
}
