#pragma once

#include "coh/cohclass.hpp"

namespace coh {

// Correspondence X^a |- X^b: a class on X^{a+b} whose first a factors are
// the source and last b factors the target.
struct Correspondence {
    CohClass carrier;
    int sourceArity;
    int targetArity;

    Correspondence(CohClass c, int a, int b);
};

// The unique class D on X^2 with act(D, x) = x for every basis class x.
// Coefficients are solved from the identity-action linear system rather than
// hard-coded, so the result is consistent with whatever sign conventions the
// multiplication uses.
Correspondence diagonal(const SpaceSpec& sp);

// Class of {(x,x,x)} in X^3, as a correspondence X^2 |- X; acts as the cup
// product.
Correspondence small_diagonal(const SpaceSpec& sp);

CohClass act(const Correspondence& gamma, const CohClass& alpha);

// act(compose(f,g), x) = act(g, act(f, x)).
Correspondence compose(const Correspondence& f, const Correspondence& g);

Correspondence transpose(const Correspondence& gamma);

// (f x g) with sources of f and g interleaved before both targets; for two
// X |- X correspondences this is p13^*(f) . p24^*(g) on X^4.
Correspondence exterior_product(const Correspondence& f, const Correspondence& g);

}  // namespace coh
