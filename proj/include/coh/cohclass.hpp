#pragma once

#include "coh/space.hpp"

#include <map>
#include <vector>

namespace coh {

// One tensor-basis word of H*(X^m): one letter per factor.
using Word = std::vector<Letter>;

int word_degree(const SpaceSpec& sp, const Word& w);
int word_parity(const SpaceSpec& sp, const Word& w);

// Sparse exact-rational class in H*(X^m). Terms map Word -> coefficient and
// never store zeros; words are ordered lexicographically, which is the
// canonical term order used for serialization and witnesses.
//
// All factor positions in this module are 0-based.
class CohClass {
public:
    CohClass(SpaceSpec space, int arity);

    const SpaceSpec& space() const { return space_; }
    int arity() const { return arity_; }
    const std::map<Word, Rational>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    void addTerm(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    // Largest degree among terms, -1 for the zero class.
    int maxDegree() const;
    // True when every term has the given cohomological degree.
    bool isHomogeneous(int degree) const;

    CohClass& operator+=(const CohClass& rhs);
    CohClass& operator-=(const CohClass& rhs);
    CohClass& operator*=(const Rational& c);

    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(const Rational& c, CohClass a) { return a *= c; }
    friend CohClass operator*(const CohClass& a, const CohClass& b);

    bool operator==(const CohClass& rhs) const;

private:
    SpaceSpec space_;
    int arity_;
    std::map<Word, Rational> terms_;
};

CohClass zero_class(const SpaceSpec& sp, int arity);
CohClass unit_class(const SpaceSpec& sp, int arity);
CohClass word_class(const SpaceSpec& sp, Word w, Rational c = 1);

// Arity-1 building blocks. h_power returns the zero class when j > topPower.
CohClass h_power(const SpaceSpec& sp, int j);
CohClass basis_letter(const SpaceSpec& sp, Letter l);
// Normalized point class o = h^topPower / topIntegral (integral 1).
CohClass point_class(const SpaceSpec& sp);

// Cup product with the Koszul sign rule
//   (a_1 x...x a_m)(b_1 x...x b_m) = (-1)^{sum_{i>j} |a_i||b_j|} (a_1 b_1 x...).
// Throws on space or arity mismatch.
CohClass mul(const CohClass& a, const CohClass& b);

// Integral over X^m: product of per-factor integrals; only words whose every
// letter is the top even letter contribute.
Rational integrate(const CohClass& a);

// Pullback along the projection X^m -> X^{|kept|}: inserts unit letters at
// positions outside `kept`. `kept` must be strictly increasing, 0-based,
// with |kept| = arity(a) and entries < m.
CohClass pullback_proj(const CohClass& a, const std::vector<int>& kept, int m);

// Pushforward along the same projection: integrates out dropped factors.
// A term survives only if every dropped letter is the top even letter.
CohClass pushforward_proj(const CohClass& a, const std::vector<int>& kept);

// Reorders tensor factors, sending position i to sigma[i]; each term picks up
// the sign (-1)^{# crossings of odd letters}.
CohClass permute(const CohClass& a, const std::vector<int>& sigma);

// Canonical text form, e.g. "1/4*(h3|h0) - (e1|f1)".
std::string to_string(const CohClass& a);

// Structured form for reports: one (letter names, numerator, denominator)
// triple per term, in canonical lexicographic word order.
struct SerializedTerm {
    std::vector<std::string> letters;
    std::string numerator;
    std::string denominator;

    bool operator==(const SerializedTerm&) const = default;
};
std::vector<SerializedTerm> serialized_terms(const CohClass& a);

}  // namespace coh
