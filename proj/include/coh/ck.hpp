#pragma once

#include "coh/corr.hpp"
#include "coh/report.hpp"

#include <map>
#include <vector>

namespace coh {

// Chow-Kunneth system in cohomology: projectors keyed by the degree they cut
// out. Even degrees 0, 2, ..., 2(topPower) are rank one; the middle degree
// carries the odd part.
struct CKDecomposition {
    SpaceSpec space;
    std::map<int, Correspondence> projectors;

    std::vector<int> degrees() const;
};

// pi^{2j} = (1/t) h^{top-j} x h^j for j = 0..topPower, and the middle
// projector is the diagonal minus the even part.
CKDecomposition build_ck(int g);
CKDecomposition build_ck(const SpaceSpec& sp);

// Checks completeness (sum = diagonal), idempotency, mutual orthogonality,
// and that each projector cuts out exactly its degree on the full basis.
Report verify_ck(const CKDecomposition& d);

// Carrier of pi^k o smalldiag o (pi^i x pi^j) on X^3. Throws on degrees not
// realized by the decomposition.
CohClass mck_defect(const CKDecomposition& d, int i, int j, int k);

// Enumerates all triples: those with i+j != k must vanish; also reports how
// many triples with i+j == k are nonzero (the check is vacuous if none are).
Report mck_full_check(const CKDecomposition& d, int threads = 1);

// Coefficients a_1..a_{2g} with D . p_j^*(h) = sum a_i h^i x h^{2g-i}.
// The first 2g-1 entries are read off the expansion; the final coordinate
// multiplies h^{2g} x h^0, which is the zero class (h^{2g} vanishes), and is
// reported as 1/4 after verifying the full identity with that value.
// Throws std::runtime_error if the product has a non-decomposable residue.
std::vector<Rational> hyp_coefficients(int g);

Report hyp_report(int g);

}  // namespace coh
