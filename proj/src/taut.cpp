#include "coh/taut.hpp"

#include "coh/corr.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coh {

const CohClass& TautGenerators::tauAt(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = tau.find({i, j});
    if (it == tau.end()) throw std::invalid_argument("tau index out of range");
    return it->second;
}

CohClass tau_class(const SpaceSpec& sp) {
    CohClass t = diagonal(sp).carrier;
    Rational inv = 1 / sp.topIntegral;
    for (int j = 0; j <= sp.topPower; ++j)
        t.addTerm({sp.h(sp.topPower - j), sp.h(j)}, -inv);
    return t;
}

TautGenerators build_generators(const SpaceSpec& sp, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    TautGenerators gens{sp, m, {}, {}, {}};
    CohClass h1 = h_power(sp, 1);
    CohClass o1 = point_class(sp);
    CohClass tau2 = tau_class(sp);
    for (int i = 0; i < m; ++i) {
        gens.h.push_back(pullback_proj(h1, {i}, m));
        gens.o.push_back(pullback_proj(o1, {i}, m));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            gens.tau.emplace(std::make_pair(i, j), pullback_proj(tau2, {i, j}, m));
    return gens;
}

TautGenerators build_generators(int g, int m) {
    return build_generators(make_space(SpaceKind::YType, g), m);
}

namespace {

struct RelationCheck {
    CheckResult result;
    double t0;

    RelationCheck(const TautGenerators& gens, const char* rel)
        : t0(now_ms()) {
        result.check = "taut-relations";
        result.params = {{"g", std::to_string(gens.space.g)},
                         {"m", std::to_string(gens.m)},
                         {"rel", rel}};
    }

    void expectZero(const CohClass& c, const std::string& label) {
        if (c.isZero()) return;
        result.status = Status::Fail;
        if (result.witness.empty())
            result.witness = label + " = " + to_string(c);
    }

    CheckResult finish() {
        result.wallMs = now_ms() - t0;
        return std::move(result);
    }
};

}  // namespace

Report verify_relations(const TautGenerators& gens) {
    Report rep;
    const SpaceSpec& sp = gens.space;
    const int m = gens.m;
    const Rational b = rat(sp.oddRank);

    {
        RelationCheck c(gens, "o-square");
        for (int i = 0; i < m; ++i)
            c.expectZero(mul(gens.o[i], gens.o[i]), "o^2");
        rep.add(c.finish());
    }
    {
        RelationCheck c(gens, "h-o");
        for (int i = 0; i < m; ++i)
            c.expectZero(mul(gens.h[i], gens.o[i]), "h.o");
        rep.add(c.finish());
    }
    {
        RelationCheck c(gens, "h-top");
        for (int i = 0; i < m; ++i) {
            CohClass pow = unit_class(sp, m);
            for (int p = 0; p < sp.topPower; ++p) pow = mul(pow, gens.h[i]);
            c.expectZero(pow - sp.topIntegral * gens.o[i], "h^top - t.o");
        }
        rep.add(c.finish());
    }
    if (m >= 2) {
        RelationCheck co(gens, "tau-o");
        RelationCheck ch(gens, "tau-h");
        RelationCheck cs(gens, "tau-square");
        for (const auto& [ij, t] : gens.tau) {
            for (int end : {ij.first, ij.second}) {
                co.expectZero(mul(t, gens.o[end]), "tau.o");
                ch.expectZero(mul(t, gens.h[end]), "tau.h");
            }
            cs.expectZero(mul(t, t) + b * mul(gens.o[ij.first], gens.o[ij.second]),
                          "tau^2 + b.o.o");
        }
        rep.add(co.finish());
        rep.add(ch.finish());
        rep.add(cs.finish());
    }
    if (m >= 3) {
        RelationCheck c(gens, "tau-triple");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    if (i == j || i == k) continue;
                    c.expectZero(mul(gens.tauAt(i, j), gens.tauAt(i, k)) -
                                     mul(gens.tauAt(j, k), gens.o[i]),
                                 "tau.tau - tau.o");
                }
        rep.add(c.finish());
    }
    return rep;
}

CohClass symmetrized_tau_term(const TautGenerators& gens,
                              const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != gens.m || gens.m % 2 != 0)
        throw std::invalid_argument("permutation must cover an even arity");
    CohClass term = gens.tauAt(perm[0], perm[1]);
    for (int p = 2; p < gens.m; p += 2)
        term = mul(term, gens.tauAt(perm[p], perm[p + 1]));
    return term;
}

std::vector<int> nth_permutation(int m, unsigned long idx) {
    std::vector<unsigned long> fact(m, 1);
    for (int i = 1; i < m; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> perm;
    perm.reserve(m);
    for (int i = m - 1; i >= 0; --i) {
        unsigned long q = idx / fact[i];
        idx %= fact[i];
        perm.push_back(pool[q]);
        pool.erase(pool.begin() + static_cast<long>(q));
    }
    return perm;
}

// factorial(m) must fit an unsigned long; anything near that bound is far
// beyond what a batch run can enumerate anyway.
static void require_enumerable(int m) {
    if (m > 20) throw CapExceeded("permutation sum arity too large");
}

CohClass symmetrized_tau_sum_serial(const SpaceSpec& sp) {
    const int m = sp.oddRank + 2;
    require_enumerable(m);
    TautGenerators gens = build_generators(sp, m);
    CohClass sum = zero_class(sp, m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        sum += symmetrized_tau_term(gens, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

CohClass symmetrized_tau_sum(const SpaceSpec& sp, int threads) {
    const int m = sp.oddRank + 2;
    require_enumerable(m);
    TautGenerators gens = build_generators(sp, m);
    unsigned long total = 1;
    for (int i = 2; i <= m; ++i) total *= static_cast<unsigned long>(i);
    if (threads < 1) threads = 1;
    std::vector<CohClass> partial(threads, zero_class(sp, m));
#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
#pragma omp for schedule(static)
        for (long idx = 0; idx < static_cast<long>(total); ++idx)
            partial[t] +=
                symmetrized_tau_term(gens, nth_permutation(m, static_cast<unsigned long>(idx)));
    }
    CohClass sum = zero_class(sp, m);
    for (const CohClass& p : partial) sum += p;
    return sum;
}

CohClass canonical_class(const SpaceSpec& sp) {
    return rat(2 * sp.g - 2) * point_class(sp);
}

CohClass fp_class(int g, const Rational& normalization) {
    if (g < 2) throw std::invalid_argument("fp class needs g >= 2");
    SpaceSpec sp = make_space(SpaceKind::CurveType, g);
    CohClass k = canonical_class(sp);
    CohClass diag = diagonal(sp).carrier;
    CohClass kxk = mul(pullback_proj(k, {0}, 2), pullback_proj(k, {1}, 2));
    return mul(diag, pullback_proj(k, {1}, 2)) - normalization * kxk;
}

CohClass fp_class(int g) {
    if (g < 2) throw std::invalid_argument("fp class needs g >= 2");
    return fp_class(g, rat(1, 2 * g - 2));
}

}  // namespace coh
