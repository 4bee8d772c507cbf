#include "coh/corr.hpp"

#include "coh/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace coh {

Correspondence::Correspondence(CohClass c, int a, int b)
    : carrier(std::move(c)), sourceArity(a), targetArity(b) {
    if (a < 1 || b < 1) throw std::invalid_argument("arities must be positive");
    if (carrier.arity() != a + b)
        throw std::invalid_argument("carrier arity must be source + target");
}

static std::vector<int> iota_range(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

CohClass act(const Correspondence& gamma, const CohClass& alpha) {
    if (!(alpha.space() == gamma.carrier.space()))
        throw std::invalid_argument("space mismatch");
    if (alpha.arity() != gamma.sourceArity)
        throw std::invalid_argument("arity mismatch");
    const int a = gamma.sourceArity, b = gamma.targetArity;
    CohClass lifted = pullback_proj(alpha, iota_range(0, a), a + b);
    return pushforward_proj(mul(lifted, gamma.carrier), iota_range(a, b));
}

Correspondence diagonal(const SpaceSpec& sp) {
    // Candidate words on X^2 of total degree equal to the per-factor top
    // degree: h^j x h^{top-j} and all odd x odd pairs.
    std::vector<Word> candidates;
    for (int j = 0; j <= sp.topPower; ++j)
        candidates.push_back({sp.h(j), sp.h(sp.topPower - j)});
    for (int i = 0; i < sp.oddRank; ++i)
        for (int j = 0; j < sp.oddRank; ++j)
            candidates.push_back({static_cast<Letter>(sp.topPower + 1 + i),
                                  static_cast<Letter>(sp.topPower + 1 + j)});

    // Linear system: for every basis letter x, act(D, x) = x, one equation
    // per (input letter, output letter) component.
    const int nBasis = sp.letterCount();
    const int nUnknown = static_cast<int>(candidates.size());
    std::vector<std::vector<Rational>> A(nBasis * nBasis,
                                         std::vector<Rational>(nUnknown, Rational(0)));
    std::vector<Rational> rhs(nBasis * nBasis, Rational(0));
    for (int x = 0; x < nBasis; ++x) {
        CohClass basis = basis_letter(sp, static_cast<Letter>(x));
        for (int u = 0; u < nUnknown; ++u) {
            Correspondence cand(word_class(sp, candidates[u]), 1, 1);
            CohClass image = act(cand, basis);
            for (const auto& [w, c] : image.terms())
                A[x * nBasis + w[0]][u] = c;
        }
        rhs[x * nBasis + x] = rat(1);
    }
    auto sol = solve_unique(std::move(A), std::move(rhs));
    if (!sol) throw std::logic_error("diagonal system has no unique solution");
    CohClass carrier(sp, 2);
    for (int u = 0; u < nUnknown; ++u) carrier.addTerm(candidates[u], (*sol)[u]);
    return Correspondence(std::move(carrier), 1, 1);
}

Correspondence small_diagonal(const SpaceSpec& sp) {
    CohClass d = diagonal(sp).carrier;
    CohClass carrier = mul(pullback_proj(d, {0, 1}, 3), pullback_proj(d, {1, 2}, 3));
    return Correspondence(std::move(carrier), 2, 1);
}

Correspondence compose(const Correspondence& f, const Correspondence& g) {
    if (!(f.carrier.space() == g.carrier.space()))
        throw std::invalid_argument("space mismatch");
    if (f.targetArity != g.sourceArity)
        throw std::invalid_argument("inner arity mismatch");
    const int a = f.sourceArity, b = f.targetArity, c = g.targetArity;
    const int m = a + b + c;
    CohClass lf = pullback_proj(f.carrier, iota_range(0, a + b), m);
    CohClass lg = pullback_proj(g.carrier, iota_range(a, b + c), m);
    std::vector<int> outer = iota_range(0, a);
    for (int i = 0; i < c; ++i) outer.push_back(a + b + i);
    return Correspondence(pushforward_proj(mul(lf, lg), outer), a, c);
}

Correspondence transpose(const Correspondence& gamma) {
    const int a = gamma.sourceArity, b = gamma.targetArity;
    std::vector<int> sigma(a + b);
    for (int i = 0; i < a; ++i) sigma[i] = b + i;
    for (int i = 0; i < b; ++i) sigma[a + i] = i;
    return Correspondence(permute(gamma.carrier, sigma), b, a);
}

Correspondence exterior_product(const Correspondence& f, const Correspondence& g) {
    if (!(f.carrier.space() == g.carrier.space()))
        throw std::invalid_argument("space mismatch");
    const int a = f.sourceArity, b = f.targetArity;
    const int c = g.sourceArity, d = g.targetArity;
    const int m = a + c + b + d;
    std::vector<int> sf = iota_range(0, a);
    for (int i = 0; i < b; ++i) sf.push_back(a + c + i);
    std::vector<int> sg = iota_range(a, c);
    for (int i = 0; i < d; ++i) sg.push_back(a + c + b + i);
    CohClass carrier = mul(pullback_proj(f.carrier, sf, m),
                           pullback_proj(g.carrier, sg, m));
    return Correspondence(std::move(carrier), a + c, b + d);
}

}  // namespace coh
