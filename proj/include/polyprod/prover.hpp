#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprod/certificate.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/pairs.hpp"

namespace polyprod {

/* Torsion in the homology of a full subcomplex, reported when it blocks a
 * rule. The class transfers to degree |I| + 1 + deg of the moment-angle
 * homology, which obstructs every implemented wedge route. */
struct TorsionWitness {
    VertexSet subset;
    HomologyProfile profile;          // reduced homology of K_I
    int degree = 0;                   // degree of the torsion inside H(K_I)
    std::vector<long long> torsion;   // offending coefficients at that degree
    int mac_degree = 0;               // degree + |I| + 1
};

struct RuleAttempt {
    std::string rule_id;
    bool applicable = false;  // the structural frame of the rule matched
    std::string outcome;      // "proved" or the failed hypothesis
};

struct ProofFailure {
    std::string deepest;  // the most specific hypothesis that failed
    std::vector<RuleAttempt> attempts;
    std::optional<TorsionWitness> witness;
    std::vector<std::string> notes;
};

struct ProverResult {
    bool proved = false;
    std::optional<Certificate> certificate;  // set iff proved
    std::optional<ProofFailure> failure;     // set iff not proved
};

/* Decides membership of the loop space of the polyhedral product in the
 * class P (finite-type products of spheres and loop spaces of simply
 * connected spheres), by trying the implemented criteria in a fixed order:
 *
 *   dim1-complex                      K of dimension <= 1
 *   orientable-surface                closed orientable surface triangulations
 *   dim2-torsion-free                 2-dimensional, torsion-free full
 *                                     subcomplexes with complete 1-skeleton
 *   low-dim-pseudomanifold            2/3-dimensional pseudomanifolds with
 *                                     incomplete 1-skeleton
 *   pseudomanifold-with-boundary-low-dim
 *                                     facet filtrations in dimension <= 3
 *   neighbourly-odd-sphere /          k-neighbourly triangulated S^{2k+1}
 *   sphere3-complete-skeleton         (moment-angle pairs only)
 *   vertex-deletion-induction         recursion over every K \ i when the
 *                                     1-skeleton is incomplete
 *
 * The first rule that applies with all hypotheses verified produces the
 * certificate. Otherwise the failure report keeps every attempt and points
 * at the deepest failed hypothesis, with a torsion witness when one exists.
 * General pair classes must attest Sigma A_i in W; the attestation is
 * recorded and grades the certificate Conditional. */
ProverResult p_membership(const SimplicialComplex& K, const PairClass& pairs, int cap = 20);

}  // namespace polyprod
