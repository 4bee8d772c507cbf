#pragma once

#include "coh/rational.hpp"

#include <cstdint>
#include <string>

namespace coh {

enum class SpaceKind { YType, CurveType };

// Basis letters of H*(X) are encoded as small integers:
//   0 .. topPower          the even classes h^0 .. h^topPower
//   topPower+1 .. +g       the odd classes e_1 .. e_g
//   topPower+g+1 .. +2g    the odd classes f_1 .. f_g
// (e_i, f_i) is a symplectic basis of the middle cohomology normalized so
// that the integral of e_i * f_i is 1.
using Letter = std::uint8_t;

// Ring blueprint of a Hodge-level-1 space, parametrized by the genus g.
// YType(g): powers h^0..h^{2g-1} with integral of h^{2g-1} equal to 4, odd
// part of rank 2g in degree 2g-1. CurveType(g): even part {1, point} with
// integral of the point equal to 1, odd part of rank 2g in degree 1.
struct SpaceSpec {
    SpaceKind kind;
    int g;
    int topPower;          // largest nonzero h power
    Rational topIntegral;  // integral of h^topPower over X
    int oddDegree;         // cohomological degree of the odd letters
    int oddRank;           // = 2g

    int letterCount() const { return topPower + 1 + oddRank; }
    int totalDim() const { return letterCount(); }
    int factorTopDegree() const { return 2 * topPower; }

    Letter h(int j) const;  // requires 0 <= j <= topPower
    Letter e(int i) const;  // 1-based, 1 <= i <= g
    Letter f(int i) const;
    Letter unit() const { return 0; }
    Letter top() const { return static_cast<Letter>(topPower); }

    bool isH(Letter l) const { return l <= topPower; }
    bool isOdd(Letter l) const { return l > topPower; }
    int hPower(Letter l) const { return l; }
    int degreeOf(Letter l) const;
    std::string letterName(Letter l) const;

    bool operator==(const SpaceSpec&) const = default;
};

// Throws std::invalid_argument for g < 1.
SpaceSpec make_space(SpaceKind kind, int g);

}  // namespace coh
