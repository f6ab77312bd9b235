#pragma once

#include <utility>
#include <vector>

#include "polyprod/errors.hpp"

namespace polyprod {

// Simple undirected graph on nodes 0..n-1, adjacency lists kept sorted.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int a, int b) const;
    bool connected() const;
    // connected components, each sorted, ordered by smallest contained node
    std::vector<std::vector<int>> components() const;
};

/* Removal ordering for a connected graph with max degree <= bound and at
 * least one node of degree < bound: an ordering v_1, ..., v_N such that each
 * v_t has degree < bound in the subgraph induced by {v_t, ..., v_N}.
 *
 * Deterministic: the smallest qualifying node is picked at each step and the
 * components of the remainder are processed in order of smallest contained
 * node. Throws HypothesisError with kind Disconnected, DegreeAboveBound or
 * NoVertexBelowBound when the hypotheses fail.
 */
std::vector<int> vertex_removal_ordering(const SimpleGraph& g, int bound);

/* Check that `order` is a valid removal ordering by replaying prefixes:
 * every node must occur exactly once and have degree < bound among the
 * not-yet-removed nodes. */
bool valid_removal_ordering(const SimpleGraph& g, int bound, const std::vector<int>& order);

}  // namespace polyprod
