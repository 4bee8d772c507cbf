#pragma once

#include "coh/cohclass.hpp"
#include "coh/report.hpp"

#include <map>
#include <vector>

namespace coh {

// degree -> dimension, even degrees only (all generators are even).
using HilbertFunction = std::map<int, long>;

// Relation families defining the abstract presentation. Tests drop a family
// to confirm the comparison against cohomology is not vacuous.
struct PresentationOptions {
    bool tripleRelation = true;   // tau_ij tau_ik = tau_jk o_i
    bool symmetrizedSum = true;   // S_{b+2}-symmetrized tau products vanish
};

// Degree-wise dimensions of the subalgebra of H*(Y^m) generated by
// h_i, o_i, tau_ij, up to the top degree m * (4g-2). Throws CapExceeded when
// a single degree holds more than termCap monomials.
HilbertFunction image_hilbert(int g, int m, long termCap, int threads = 1);

// Degree-wise dimensions of the free graded commutative algebra on the same
// generators modulo the relation ideal, computed by exact rank of spanned
// relation multiples. The computed window extends one generator degree past
// the image cap so vanishing beyond the cap is checked rather than assumed.
HilbertFunction abstract_hilbert(int g, int m, long termCap, int threads = 1,
                                 const PresentationOptions& opts = {});

// Pass iff the two Hilbert functions agree in every degree (image counts as
// zero beyond its cap).
Report injectivity_report(int g, int m, long termCap, int threads = 1);

}  // namespace coh
