#pragma once

#include <optional>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/graph.hpp"

namespace polyprod {

/* Dual graph of a pure complex: one node per facet (in canonical facet
 * order), an edge when two facets share a codimension-one face. */
struct DualGraph {
    std::vector<VertexSet> nodes;
    SimpleGraph graph;
};

DualGraph dual_graph(const SimplicialComplex& K);  // HypothesisError(NotPure) otherwise

struct PseudoClass {
    bool pure = false;
    int dimension = -2;
    // every codimension-one face lies in at most two facets (only meaningful
    // when pure)
    bool weak_pm_with_boundary = false;
    std::vector<VertexSet> boundary_faces;  // codim-one faces lying in exactly one facet
    bool closed = false;                    // weak pm with empty boundary
    bool dual_connected = false;
    bool pseudomanifold = false;            // pure + closed + dual connected
    bool pseudomanifold_with_boundary = false;
};

// Total: never throws on well-formed complexes.
PseudoClass classify(const SimplicialComplex& K);

// Subcomplex generated by the boundary faces. For a closed weak
// pseudomanifold this is the void complex.
SimplicialComplex boundary_complex(const SimplicialComplex& K);

/* A removal pair for a maximal face σ: a codimension-one face τ ⊂ σ that is
 * maximal in K \ σ, equivalently σ is the only facet of K containing τ.
 * L = K \ {σ, τ}. The smallest such τ (lexicographically) is chosen. */
struct RemovalPair {
    VertexSet sigma;
    VertexSet tau;
    SimplicialComplex L = SimplicialComplex::empty_complex(0);
    bool low_dim = false;  // set when dim σ = 1; propagated into certificates
};

// std::nullopt when no τ qualifies (e.g. closed pseudomanifolds).
// Requires σ maximal in K and dim σ >= 1.
std::optional<RemovalPair> find_removal_pair(const SimplicialComplex& K, VertexSet sigma);

struct FiltrationStep {
    VertexSet sigma;
    VertexSet tau;
    // complex once σ is removed
    SimplicialComplex after = SimplicialComplex::empty_complex(0);
};

/* Facet filtration K = K_0 ⊃ K_1 ⊃ ... ⊃ K_ℓ = (n-1)-skeleton of K for a
 * pure n-dimensional weak pseudomanifold with boundary whose dual-graph
 * components each contain a node of degree < n+1. Facet i is removed along
 * the removal pair (σ_i, τ_i), where τ_i lies in exactly one facet of
 * K_{i-1}. */
struct FacetFiltration {
    std::vector<FiltrationStep> steps;
    SimplicialComplex skeleton_result = SimplicialComplex::empty_complex(0);
    bool low_dim = false;
};

FacetFiltration facet_filtration(const SimplicialComplex& K);

/* Evidence that K \ i satisfies the facet-filtration hypotheses. K itself
 * must be a pseudomanifold of dimension >= 1. */
struct DeletionEvidence {
    int vertex = 0;
    Subcomplex deleted;
    bool pure = false;
    int dimension = -2;
    bool weak_pm_with_nonempty_boundary = false;
    bool components_have_low_degree_node = false;
    bool all_pass = false;
};

DeletionEvidence deletion_hypotheses(const SimplicialComplex& K, int i);

}  // namespace polyprod
