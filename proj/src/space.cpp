#include "coh/space.hpp"

#include <stdexcept>

namespace coh {

Letter SpaceSpec::h(int j) const {
    if (j < 0 || j > topPower) throw std::invalid_argument("h power out of range");
    return static_cast<Letter>(j);
}

Letter SpaceSpec::e(int i) const {
    if (i < 1 || i > g) throw std::invalid_argument("odd index out of range");
    return static_cast<Letter>(topPower + i);
}

Letter SpaceSpec::f(int i) const {
    if (i < 1 || i > g) throw std::invalid_argument("odd index out of range");
    return static_cast<Letter>(topPower + g + i);
}

int SpaceSpec::degreeOf(Letter l) const {
    if (isH(l)) {
        // h sits in degree 2 on the YType profile and the curve point class
        // sits in degree 2 as well; h^j has degree 2j.
        return 2 * hPower(l);
    }
    return oddDegree;
}

std::string SpaceSpec::letterName(Letter l) const {
    if (isH(l)) return "h" + std::to_string(hPower(l));
    int i = l - topPower;
    if (i <= g) return "e" + std::to_string(i);
    return "f" + std::to_string(i - g);
}

SpaceSpec make_space(SpaceKind kind, int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    SpaceSpec sp;
    sp.kind = kind;
    sp.g = g;
    sp.oddRank = 2 * g;
    if (kind == SpaceKind::YType) {
        sp.topPower = 2 * g - 1;
        sp.topIntegral = rat(4);
        sp.oddDegree = 2 * g - 1;
    } else {
        sp.topPower = 1;
        sp.topIntegral = rat(1);
        sp.oddDegree = 1;
    }
    return sp;
}

}  // namespace coh
