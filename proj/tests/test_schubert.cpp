#include "coh/schubert.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace coh;
using namespace coh::schubert;

TEST_CASE("pieri rule") {
    Grassmannian gr{2, 6};
    SchubertClass s21 = sigma(gr, {2, 1});

    SchubertClass got = pieri(s21, 2);
    SchubertClass expect(gr);
    expect.addTerm({4, 1}, rat(1));
    expect.addTerm({3, 2}, rat(1));
    CHECK(got == expect);

    CHECK(pieri(unit(gr), 0) == unit(gr));
    CHECK(pieri(sigma(gr, {4, 4}), 1).isZero());
    CHECK_THROWS_AS(pieri(s21, 5), std::invalid_argument);
    CHECK_THROWS_AS(sigma(gr, {5}), std::invalid_argument);
}

TEST_CASE("partition normalization") {
    CHECK(Partition{3, 2, 0, 0} == Partition{3, 2});
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{4, 1}.str() == "(4,1)");
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition{-1}, std::invalid_argument);
}

TEST_CASE("degree additivity of pieri") {
    Grassmannian gr{2, 6};
    for (int w = 0; w <= 6; ++w)
        for (const Partition& lambda : oracles::box_partitions(2, 4, w))
            for (int r = 0; r <= 4; ++r) {
                SchubertClass result = pieri(sigma(gr, lambda), r);
                for (const auto& [nu, c] : result.terms()) {
                    CHECK(nu.size() == lambda.size() + r);
                    CHECK(c == rat(1));
                }
            }
}

TEST_CASE("squares of the line-condition class") {
    Grassmannian gr{2, 6};
    SchubertClass s21 = sigma(gr, {2, 1});
    SchubertClass sq = mult(s21, s21);
    SchubertClass expect(gr);
    expect.addTerm({4, 2}, rat(1));
    expect.addTerm({3, 3}, rat(1));
    CHECK(sq == expect);
    CHECK(integrate_top(pieri(sq, 2)) == rat(1));
}

TEST_CASE("products agree with the tableau-counting oracle") {
    Grassmannian gr{2, 6};
    for (int wl = 0; wl <= 8; ++wl) {
        for (const Partition& lambda : oracles::box_partitions(2, 4, wl)) {
            for (int wm = 0; wm + wl <= 8; ++wm) {
                for (const Partition& mu : oracles::box_partitions(2, 4, wm)) {
                    SchubertClass got = mult(sigma(gr, lambda), sigma(gr, mu));
                    auto expect = oracles::schur_product_in_box(lambda, mu, 2, 4);
                    CHECK(got.terms().size() == expect.size());
                    for (const auto& [nu, c] : got.terms()) {
                        INFO(lambda.str(), "*", mu.str(), " at ", nu.str());
                        REQUIRE(expect.count(nu) == 1);
                        CHECK(c == rat(expect.at(nu)));
                    }
                }
            }
        }
    }
}

TEST_CASE("mult is unital and commutative") {
    Grassmannian gr{2, 6};
    SchubertClass a(gr);
    a.addTerm({2, 1}, rat(3, 2));
    a.addTerm({1}, rat(-1));
    CHECK(mult(unit(gr), a) == a);
    CHECK(mult(a, unit(gr)) == a);
    SchubertClass b(gr);
    b.addTerm({2}, rat(1));
    b.addTerm({1, 1}, rat(2));
    CHECK(mult(a, b) == mult(b, a));
}

TEST_CASE("schubert basis is self-dual") {
    Grassmannian gr{2, 6};
    for (int w = 0; w <= 8; ++w)
        for (const Partition& lambda : oracles::box_partitions(2, 4, w)) {
            Partition dual({4 - lambda.part(1), 4 - lambda.part(0)});
            CHECK(integrate_top(mult(sigma(gr, lambda), sigma(gr, dual))) == rat(1));
        }
}

TEST_CASE("top integration") {
    Grassmannian gr{2, 6};
    CHECK(integrate_top(unit(gr)) == rat(0));
    CHECK(integrate_top(sigma(gr, {4, 4})) == rat(1));
}

TEST_CASE("degree of c2 on the line surface") {
    CHECK(fano_surface_c2_degree() == rat(16));
    Report rep = fano_degree_check();
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == Status::Pass);
    CHECK(rep.entries[0].detail == "deg=16");

    // regression pin: pairing against c1^2 instead gives 32
    Grassmannian gr{2, 6};
    SchubertClass s21 = sigma(gr, {2, 1});
    SchubertClass square = mult(s21, s21);
    SchubertClass fano(gr);
    for (const auto& [p, c] : square.terms()) fano.addTerm(p, rat(16) * c);
    CHECK(integrate_top(pieri(pieri(fano, 1), 1)) == rat(32));

    // the same recipe overflows the box on Gr(2,4)
    Grassmannian small{2, 4};
    SchubertClass t = sigma(small, {2, 1});
    CHECK(mult(t, t).isZero());
}

TEST_CASE("dimension bookkeeping") {
    auto d = dimension_counts(2);
    CHECK(d.r == 41);
    CHECK(d.rankE == 6);
    CHECK(d.s == 35);
    CHECK(d.fiberY == 39);
    CHECK(d.fiberYYOff == 37);
    CHECK(d.fiberYYOn == 39);
    CHECK(d.fiberFYOn == 35);
    CHECK(d.fiberFYOff == 33);

    auto d1 = dimension_counts(1);
    CHECK(d1.r == 19);  // 2 * C(5,2) - 1
    CHECK(d1.rankE == 2);
    CHECK(d1.s == 17);

    for (int g = 1; g <= 5; ++g) {
        Report rep = dimension_report(g);
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].status == Status::Pass);
    }
    CHECK_THROWS_AS(dimension_counts(0), std::invalid_argument);
}
