#pragma once

#include "coh/cohclass.hpp"
#include "coh/report.hpp"

#include <map>
#include <vector>

namespace coh {

// Tautological generators on X^m: hyperplane pullbacks h_i, normalized point
// classes o_i = (1/t) h_i^top, and middle-projector pullbacks tau_ij.
// Indices are 0-based; tau is symmetric so pairs are stored with i < j.
struct TautGenerators {
    SpaceSpec space;
    int m;
    std::vector<CohClass> h;
    std::vector<CohClass> o;
    std::map<std::pair<int, int>, CohClass> tau;

    const CohClass& tauAt(int i, int j) const;
};

// The middle Kunneth projector tau = D - (1/t) sum_j h^{top-j} x h^j on X^2.
CohClass tau_class(const SpaceSpec& sp);

TautGenerators build_generators(const SpaceSpec& sp, int m);
TautGenerators build_generators(int g, int m);

// Exact checks of the relation families satisfied by the generators:
// o_i^2 = 0, h_i o_i = 0, h_i^top = t o_i, tau_ij o_i = tau_ij h_i = 0,
// tau_ij^2 = -b o_i o_j with b the odd rank, tau_ij tau_ik = tau_jk o_i.
Report verify_relations(const TautGenerators& gens);

// Product tau_{p(0)p(1)} ... tau_{p(m-2)p(m-1)} for one permutation of 0..m-1.
CohClass symmetrized_tau_term(const TautGenerators& gens,
                              const std::vector<int>& perm);

// Sum of the above over all permutations of 0..(oddRank+1); vanishes exactly.
CohClass symmetrized_tau_sum(const SpaceSpec& sp, int threads);
// Reference implementation (next_permutation loop), kept for testing.
CohClass symmetrized_tau_sum_serial(const SpaceSpec& sp);

// Index -> permutation of {0..m-1} in lexicographic order.
std::vector<int> nth_permutation(int m, unsigned long idx);

// Canonical class of the curve model, (2g-2) times the point class.
CohClass canonical_class(const SpaceSpec& sp);

// D . p_2^*(K) - (1/(2g-2)) K x K on C^2; zero in this model for g >= 2.
// The overload taking `normalization` replaces 1/(2g-2) (used as a control:
// any other value makes the class nonzero). Throws for g < 2.
CohClass fp_class(int g);
CohClass fp_class(int g, const Rational& normalization);

}  // namespace coh
