#pragma once

#include "polyprod/certificate.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/pairs.hpp"
#include "polyprod/space_expr.hpp"

namespace polyprod {

struct Decomposition {
    ExprPtr expr;
    Certificate certificate;
};

/* Wedge decomposition of the polyhedral product over K \ σ:
 *
 *   (CA,A)^{K\σ} ≃ ((CA,A)^{∂σ} ⋊ ∏_{i∉σ} A_i) ∨ (CA,A)^K
 *
 * for a maximal face σ with a ridge τ contained in no other facet. Throws
 * std::invalid_argument when σ is not maximal, HypothesisError(NoRemovalPair)
 * when every ridge of σ lies in a second facet, and
 * HypothesisError(DimensionTooLow) when dim σ < 2 (the splitting argument
 * needs the removal to preserve the vertex set). */
Decomposition facet_removal_decomposition(const SimplicialComplex& K, VertexSet sigma,
                                          const PairClass& pairs, int cap = 20);

/* Iterates the facet removal over the whole facet filtration of a pure weak
 * pseudomanifold with boundary:
 *
 *   (CA,A)^{K^{n-1}} ≃ ⋁_i ((CA,A)^{∂σ_i} ⋊ ∏_{j∉σ_i} A_j) ∨ (CA,A)^K.
 *
 * Filtration hypothesis failures propagate from facet_filtration. */
Decomposition skeleton_decomposition(const SimplicialComplex& K, const PairClass& pairs,
                                     int cap = 20);

/* Wedge-of-spheres form of the codimension-one skeleton of the moment-angle
 * complex over a k-neighbourly (2k+1)-dimensional pseudomanifold K with
 * sphere evidence: one Susp^{1+|I|}(K_I) summand per non-face I ≠ [m], with
 * each K_I identified as a wedge of spheres via its homology. Throws
 * HypothesisError when the neighbourliness/desuspension hypotheses or the
 * sphere evidence fail. */
Decomposition skeleton_wedge_of_zk(const SimplicialComplex& K, int cap = 20);

}  // namespace polyprod
