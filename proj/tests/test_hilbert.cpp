#include "coh/hilbert.hpp"

#include <doctest.h>

using namespace coh;

static constexpr long kCap = 1'000'000;

TEST_CASE("image dimensions for a single factor") {
    HilbertFunction h = image_hilbert(2, 1, kCap);
    // powers of h; o = h^3/4 adds nothing
    HilbertFunction expect = {{0, 1}, {2, 1}, {4, 1}, {6, 1}};
    CHECK(h == expect);
}

TEST_CASE("image dimensions for the elliptic square") {
    HilbertFunction h = image_hilbert(1, 2, kCap);
    HilbertFunction expect = {{0, 1}, {2, 3}, {4, 1}};
    CHECK(h == expect);
}

TEST_CASE("abstract quotient matches the image") {
    for (auto [g, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        HilbertFunction image = image_hilbert(g, m, kCap);
        HilbertFunction abstract = abstract_hilbert(g, m, kCap);
        for (const auto& [d, dim] : abstract) {
            long img = image.count(d) ? image.at(d) : 0;
            INFO("g=", g, " m=", m, " degree=", d);
            CHECK(dim == img);
        }
        CHECK(abstract.at(0) == 1);
        // window past the image cap is identically zero
        int cap = m * (4 * g - 2);
        for (const auto& [d, dim] : abstract)
            if (d > cap) CHECK(dim == 0);
    }
}

TEST_CASE("dropping the triple relation breaks the match") {
    PresentationOptions opts;
    opts.tripleRelation = false;
    HilbertFunction abstract = abstract_hilbert(2, 3, kCap, 2, opts);
    HilbertFunction image = image_hilbert(2, 3, kCap, 2);
    int mismatchDegree = 2 * (4 * 2 - 2);  // first degree with a tau pair
    CHECK(abstract.at(mismatchDegree) > image.at(mismatchDegree));
}

TEST_CASE("dropping the symmetrized-sum relation breaks the match") {
    PresentationOptions opts;
    opts.symmetrizedSum = false;
    HilbertFunction abstract = abstract_hilbert(1, 4, kCap, 2, opts);
    HilbertFunction image = image_hilbert(1, 4, kCap, 2);
    CHECK(abstract.at(4) == image.at(4) + 1);  // one extra symmetric class
}

TEST_CASE("caps raise and skip") {
    CHECK_THROWS_AS(image_hilbert(2, 2, 3), CapExceeded);
    CHECK_THROWS_AS(abstract_hilbert(2, 2, 3), CapExceeded);
    Report rep = injectivity_report(2, 2, 3);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == Status::SkippedCap);
}

TEST_CASE("injectivity report passes at desk scale") {
    Report rep = injectivity_report(1, 3, kCap, 2);
    REQUIRE(rep.entries.size() == 1);
    INFO(rep.entries[0].witness);
    CHECK(rep.entries[0].status == Status::Pass);
}
