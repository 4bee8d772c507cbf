#include "coh/corr.hpp"

#include "coh/ck.hpp"
#include "coh/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace coh;

static std::vector<CohClass> full_basis(const SpaceSpec& sp) {
    std::vector<CohClass> out;
    for (int l = 0; l < sp.letterCount(); ++l)
        out.push_back(basis_letter(sp, static_cast<Letter>(l)));
    return out;
}

TEST_CASE("diagonal acts as the identity") {
    for (SpaceKind kind : {SpaceKind::YType, SpaceKind::CurveType}) {
        for (int g = 1; g <= 3; ++g) {
            SpaceSpec sp = make_space(kind, g);
            Correspondence d = diagonal(sp);
            for (const CohClass& b : full_basis(sp)) CHECK(act(d, b) == b);
        }
    }
}

TEST_CASE("diagonal odd part solved from the identity action") {
    SpaceSpec sp = make_space(SpaceKind::YType, 1);
    CohClass d = diagonal(sp).carrier;
    CHECK(d.coefficient({sp.f(1), sp.e(1)}) == rat(1));
    CHECK(d.coefficient({sp.e(1), sp.f(1)}) == rat(-1));
    CHECK(d.coefficient({sp.e(1), sp.e(1)}) == rat(0));
    CHECK(d.coefficient({sp.f(1), sp.f(1)}) == rat(0));
    // even part (1/4) h^{1-j} x h^j
    CHECK(d.coefficient({sp.h(1), sp.h(0)}) == rat(1, 4));
    CHECK(d.coefficient({sp.h(0), sp.h(1)}) == rat(1, 4));

    // the odd part always carries 2g nonzero words, one signed pair per index
    for (int g = 1; g <= 3; ++g) {
        SpaceSpec spg = make_space(SpaceKind::YType, g);
        CohClass dg = diagonal(spg).carrier;
        int oddTerms = 0;
        for (const auto& [w, c] : dg.terms())
            if (spg.isOdd(w[0])) ++oddTerms;
        CHECK(oddTerms == 2 * g);
    }
}

TEST_CASE("pushforward of the diagonal is the unit") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    CohClass d = diagonal(sp).carrier;
    CHECK(pushforward_proj(d, {0}) == unit_class(sp, 1));
    CHECK(pushforward_proj(d, {1}) == unit_class(sp, 1));
}

TEST_CASE("small diagonal acts as cup product") {
    for (int g = 1; g <= 2; ++g) {
        SpaceSpec sp = make_space(SpaceKind::YType, g);
        Correspondence sd = small_diagonal(sp);
        for (const CohClass& a : full_basis(sp)) {
            for (const CohClass& b : full_basis(sp)) {
                CohClass ab = mul(pullback_proj(a, {0}, 2), pullback_proj(b, {1}, 2));
                CHECK(act(sd, ab) == mul(a, b));
            }
        }
    }
}

TEST_CASE("small diagonal on an odd pair gives the point class") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    Correspondence sd = small_diagonal(sp);
    CohClass ef = word_class(sp, {sp.e(1), sp.f(1)});
    CohClass got = act(sd, ef);
    CHECK(got == point_class(sp));
    CHECK(integrate(got) == rat(1));
}

TEST_CASE("small diagonal is symmetric under factor permutations") {
    for (int g = 1; g <= 2; ++g) {
        SpaceSpec sp = make_space(SpaceKind::YType, g);
        CohClass sd = small_diagonal(sp).carrier;
        CHECK(permute(sd, {1, 0, 2}) == sd);
        CHECK(permute(sd, {2, 1, 0}) == sd);
        CHECK(permute(sd, {1, 2, 0}) == sd);
    }
}

TEST_CASE("composition is functorial") {
    oracles::Rng rng(37);
    for (int genus = 1; genus <= 3; ++genus) {
        SpaceSpec sp = make_space(SpaceKind::YType, genus);
        for (int trial = 0; trial < 6; ++trial) {
            Correspondence f(rng.cls(sp, 2, 5), 1, 1);
            Correspondence g(rng.cls(sp, 2, 5), 1, 1);
            Correspondence fg = compose(f, g);
            for (const CohClass& b : full_basis(sp))
                CHECK(act(fg, b) == act(g, act(f, b)));
        }
    }
    // also across arities: f : X |- X^2, g : X^2 |- X
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    for (int trial = 0; trial < 4; ++trial) {
        Correspondence f(rng.cls(sp, 3, 5), 1, 2);
        Correspondence g(rng.cls(sp, 3, 5), 2, 1);
        Correspondence fg = compose(f, g);
        for (const CohClass& b : full_basis(sp))
            CHECK(act(fg, b) == act(g, act(f, b)));
    }
}

TEST_CASE("diagonal is the identity of composition") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    Correspondence d = diagonal(sp);
    CHECK(compose(d, d).carrier == d.carrier);
    oracles::Rng rng(5);
    Correspondence f(rng.cls(sp, 2, 6), 1, 1);
    CHECK(compose(d, f).carrier == f.carrier);
    CHECK(compose(f, d).carrier == f.carrier);
}

TEST_CASE("transpose") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    oracles::Rng rng(13);
    Correspondence f(rng.cls(sp, 2, 6), 1, 1);
    CHECK(transpose(transpose(f)).carrier == f.carrier);
    CHECK(transpose(diagonal(sp)).carrier == diagonal(sp).carrier);

    CohClass hab = word_class(sp, {sp.h(2), sp.h(1)});
    CHECK(transpose(Correspondence(hab, 1, 1)).carrier ==
          word_class(sp, {sp.h(1), sp.h(2)}));

    // adjoint property on the even part
    for (int a = 0; a <= sp.topPower; ++a)
        for (int b = 0; b <= sp.topPower; ++b) {
            CohClass ha = h_power(sp, a), hb = h_power(sp, b);
            CHECK(integrate(mul(act(f, ha), hb)) ==
                  integrate(mul(ha, act(transpose(f), hb))));
        }
}

TEST_CASE("exterior products") {
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    CKDecomposition ck = build_ck(2);
    const Correspondence& p0 = ck.projectors.at(0);
    Correspondence p00 = exterior_product(p0, p0);

    std::vector<CohClass> basis2;
    for (const CohClass& a : full_basis(sp))
        for (const CohClass& b : full_basis(sp))
            basis2.push_back(mul(pullback_proj(a, {0}, 2), pullback_proj(b, {1}, 2)));

    CohClass unit2 = unit_class(sp, 2);
    for (const CohClass& w : basis2) {
        CohClass got = act(p00, w);
        CHECK(got == (w == unit2 ? w : zero_class(sp, 2)));
    }

    Correspondence d = diagonal(sp);
    Correspondence dd = exterior_product(d, d);
    for (const CohClass& w : basis2) CHECK(act(dd, w) == w);

    // middle x middle has image of dimension (2g)^2
    const Correspondence& pm = ck.projectors.at(3);
    Correspondence pmm = exterior_product(pm, pm);
    std::map<Word, int> columns;
    std::vector<SparseRow> rows;
    for (const CohClass& w : basis2) {
        CohClass img = act(pmm, w);
        SparseRow row;
        for (const auto& [word, c] : img.terms()) {
            auto [it, inserted] = columns.emplace(word, static_cast<int>(columns.size()));
            row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
    }
    CHECK(rank_of(std::move(rows)) == 16);
}

TEST_CASE("projector product compatibility with the small diagonal") {
    // (p^t x q^t x r)_* of the small diagonal equals r o smalldiag o (p x q);
    // with symmetric middle projectors the transposes drop out.
    SpaceSpec sp = make_space(SpaceKind::YType, 2);
    CKDecomposition ck = build_ck(2);
    Correspondence sd = small_diagonal(sp);
    oracles::Rng rng(41);
    std::vector<int> degs;
    for (const auto& [k, p] : ck.projectors) degs.push_back(k);
    for (int trial = 0; trial < 6; ++trial) {
        const Correspondence& p = ck.projectors.at(degs[rng.uniform(0, 4)]);
        const Correspondence& q = ck.projectors.at(degs[rng.uniform(0, 4)]);
        const Correspondence& r = ck.projectors.at(degs[rng.uniform(0, 4)]);
        CohClass lhs = act(
            exterior_product(exterior_product(transpose(p), transpose(q)), r),
            sd.carrier);
        CohClass rhs = compose(compose(exterior_product(p, q), sd), r).carrier;
        CHECK(lhs == rhs);
    }
    const Correspondence& pm = ck.projectors.at(3);
    CohClass lhs =
        act(exterior_product(exterior_product(pm, pm), diagonal(sp)), sd.carrier);
    CohClass rhs = compose(compose(exterior_product(pm, pm), sd), diagonal(sp)).carrier;
    CHECK(lhs == rhs);
}

TEST_CASE("arity mismatches throw") {
    SpaceSpec sp = make_space(SpaceKind::YType, 1);
    Correspondence d = diagonal(sp);
    CHECK_THROWS_AS(act(d, unit_class(sp, 2)), std::invalid_argument);
    Correspondence sd = small_diagonal(sp);
    CHECK_THROWS_AS(compose(d, sd), std::invalid_argument);
}
