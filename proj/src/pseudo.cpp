#include "polyprod/pseudo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyprod {

DualGraph dual_graph(const SimplicialComplex& K) {
    if (!K.is_pure())
        throw HypothesisError(Hypothesis::NotPure, "dual graph needs a pure complex");
    DualGraph d;
    d.nodes = K.facets();
    std::vector<std::pair<int, int>> edges;
    const int n = K.dim();
    for (std::size_t a = 0; a < d.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < d.nodes.size(); ++b)
            if ((d.nodes[a] & d.nodes[b]).size() == n)  // shared codim-one face
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    d.graph = SimpleGraph::from_edges(static_cast<int>(d.nodes.size()), edges);
    return d;
}

namespace {

// codim-one face -> number of facets containing it (pure complexes)
std::map<std::uint64_t, int> ridge_counts(const SimplicialComplex& K) {
    std::map<std::uint64_t, int> counts;
    for (VertexSet f : K.facets())
        for (int v : f.vertices())
            counts[f.without(v).raw()] += 1;
    return counts;
}

}  // namespace

PseudoClass classify(const SimplicialComplex& K) {
    PseudoClass c;
    c.dimension = K.dim();
    c.pure = K.is_pure();
    if (K.is_void() || K.facets().empty()) return c;
    if (!c.pure) return c;

    auto counts = ridge_counts(K);
    c.weak_pm_with_boundary = true;
    for (auto& [ridge, cnt] : counts) {
        if (cnt == 1) c.boundary_faces.push_back(VertexSet(ridge));
        if (cnt > 2) c.weak_pm_with_boundary = false;
    }
    if (!c.weak_pm_with_boundary) {
        c.boundary_faces.clear();
        return c;
    }
    std::sort(c.boundary_faces.begin(), c.boundary_faces.end(), lex_less);
    c.closed = c.boundary_faces.empty();
    c.dual_connected = dual_graph(K).graph.connected();
    c.pseudomanifold = c.pure && c.closed && c.dual_connected;
    c.pseudomanifold_with_boundary = c.pure && c.weak_pm_with_boundary && c.dual_connected;
    return c;
}

SimplicialComplex boundary_complex(const SimplicialComplex& K) {
    PseudoClass c = classify(K);
    if (!c.pure)
        throw HypothesisError(Hypothesis::NotPure, "boundary needs a pure complex");
    if (!c.weak_pm_with_boundary)
        throw HypothesisError(Hypothesis::NotWeakPseudomanifold,
                              "some codimension-one face lies in more than two facets");
    if (c.boundary_faces.empty()) return SimplicialComplex::void_complex(K.vertex_count());
    // a 0-dimensional complex has the empty simplex as its only ridge
    if (c.boundary_faces.front().empty())
        return SimplicialComplex::empty_complex(K.vertex_count());
    return SimplicialComplex::from_facet_sets(K.vertex_count(), c.boundary_faces);
}

std::optional<RemovalPair> find_removal_pair(const SimplicialComplex& K, VertexSet sigma) {
    bool maximal = std::find(K.facets().begin(), K.facets().end(), sigma) != K.facets().end();
    if (!maximal)
        throw std::invalid_argument("removal pair needs a maximal face");
    if (sigma.dim() < 1)
        throw std::invalid_argument("removal pair needs dim sigma >= 1");

    // τ qualifies iff σ is the only facet containing it
    std::vector<VertexSet> candidates;
    for (int v : sigma.vertices()) candidates.push_back(sigma.without(v));
    std::sort(candidates.begin(), candidates.end(), lex_less);
    for (VertexSet tau : candidates) {
        int containing = 0;
        for (VertexSet f : K.facets())
            if (tau.subset_of(f)) ++containing;
        if (containing == 1) {
            RemovalPair pair;
            pair.sigma = sigma;
            pair.tau = tau;
            pair.L = remove_face(remove_face(K, sigma), tau);
            pair.low_dim = sigma.dim() == 1;
            return pair;
        }
    }
    return std::nullopt;
}

FacetFiltration facet_filtration(const SimplicialComplex& K) {
    PseudoClass c = classify(K);
    if (!c.pure)
        throw HypothesisError(Hypothesis::NotPure, "filtration needs a pure complex");
    if (c.dimension < 1)
        throw HypothesisError(Hypothesis::DimensionTooLow, "filtration needs dimension >= 1");
    if (!c.weak_pm_with_boundary)
        throw HypothesisError(Hypothesis::NotWeakPseudomanifold,
                              "filtration needs a weak pseudomanifold (with boundary)");
    const int n = c.dimension;

    // Removal order: per dual-graph component, remove facets so that each has
    // degree < n+1 among the facets still present.
    DualGraph d = dual_graph(K);
    std::vector<int> order;
    for (const auto& comp : d.graph.components()) {
        // induced subgraph on comp
        std::vector<int> back(d.graph.n, -1);
        for (std::size_t i = 0; i < comp.size(); ++i) back[comp[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int v : comp)
            for (int w : d.graph.adj[v])
                if (v < w && back[w] >= 0) edges.emplace_back(back[v], back[w]);
        SimpleGraph sub = SimpleGraph::from_edges(static_cast<int>(comp.size()), edges);
        std::vector<int> sub_order;
        try {
            sub_order = vertex_removal_ordering(sub, n + 1);
        } catch (const HypothesisError& e) {
            if (e.kind() == Hypothesis::NoVertexBelowBound)
                throw HypothesisError(Hypothesis::ComponentWithoutLowDegreeNode,
                                      "a dual-graph component has all degrees = n+1 "
                                      "(closed component)");
            throw;
        }
        for (int i : sub_order) order.push_back(comp[i]);
    }

    FacetFiltration fil;
    SimplicialComplex current = K;
    for (int node : order) {
        VertexSet sigma = d.nodes[node];
        auto pair = find_removal_pair(current, sigma);
        if (!pair)
            throw std::logic_error("filtration step lost its free codimension-one face");
        FiltrationStep step;
        step.sigma = sigma;
        step.tau = pair->tau;
        step.after = remove_face(current, sigma);
        fil.low_dim = fil.low_dim || pair->low_dim;
        current = step.after;
        fil.steps.push_back(std::move(step));
    }
    fil.skeleton_result = current;
    if (!(current == skeleton(K, n - 1)))
        throw std::logic_error("filtration did not end at the (n-1)-skeleton");
    return fil;
}

DeletionEvidence deletion_hypotheses(const SimplicialComplex& K, int i) {
    PseudoClass ck = classify(K);
    if (!ck.pseudomanifold)
        throw HypothesisError(Hypothesis::NotPseudomanifold,
                              "vertex deletion hypotheses are stated for pseudomanifolds");
    if (ck.dimension < 1)
        throw HypothesisError(Hypothesis::DimensionTooLow, "needs dimension >= 1");

    DeletionEvidence ev;
    ev.vertex = i;
    ev.deleted = delete_vertex(K, i);
    PseudoClass cd = classify(ev.deleted.complex);
    ev.pure = cd.pure;
    ev.dimension = cd.dimension;
    ev.weak_pm_with_nonempty_boundary =
        cd.weak_pm_with_boundary && !cd.boundary_faces.empty();
    ev.components_have_low_degree_node = false;
    if (ev.pure && cd.dimension == ck.dimension) {
        const int n = cd.dimension;
        DualGraph d = dual_graph(ev.deleted.complex);
        ev.components_have_low_degree_node = true;
        for (const auto& comp : d.graph.components()) {
            bool low = false;
            for (int v : comp)
                if (d.graph.degree(v) < n + 1) { low = true; break; }
            if (!low) ev.components_have_low_degree_node = false;
        }
    }
    ev.all_pass = ev.pure && ev.dimension == ck.dimension &&
                  ev.weak_pm_with_nonempty_boundary && ev.components_have_low_degree_node;
    return ev;
}

}  // namespace polyprod
