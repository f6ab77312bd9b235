#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/pseudo.hpp"

using namespace polyprod;

namespace {
VertexSet vs(std::initializer_list<int> l) { return VertexSet::of(l); }
const SimplicialComplex kTwoTriangles =
    SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}});
}  // namespace

TEST_CASE("classification of closed pseudomanifolds") {
    for (const char* name : {"octahedron", "rp2_six", "torus_seven"}) {
        PseudoClass c = classify(corpus_generate(name));
        CAPTURE(name);
        CHECK(c.pure);
        CHECK(c.dimension == 2);
        CHECK(c.weak_pm_with_boundary);
        CHECK(c.boundary_faces.empty());
        CHECK(c.closed);
        CHECK(c.dual_connected);
        CHECK(c.pseudomanifold);
    }
    PseudoClass cs = classify(corpus_generate("cyclic_sphere", {6, 4}));
    CHECK(cs.dimension == 3);
    CHECK(cs.pseudomanifold);

    PseudoClass pg = classify(corpus_generate("polygon", {5}));
    CHECK(pg.dimension == 1);
    CHECK(pg.pseudomanifold);
}

TEST_CASE("classification with boundary") {
    PseudoClass c = classify(kTwoTriangles);
    CHECK(c.pure);
    CHECK(c.dimension == 2);
    CHECK(c.weak_pm_with_boundary);
    CHECK(c.boundary_faces ==
          std::vector<VertexSet>{vs({1, 2}), vs({1, 3}), vs({2, 4}), vs({3, 4})});
    CHECK_FALSE(c.closed);
    CHECK_FALSE(c.pseudomanifold);
    CHECK(c.pseudomanifold_with_boundary);
}

TEST_CASE("classification rejects impure and overcrowded ridges") {
    PseudoClass impure = classify(SimplicialComplex::from_facets(3, {{1, 2}, {3}}));
    CHECK_FALSE(impure.pure);
    CHECK_FALSE(impure.pseudomanifold);
    CHECK_FALSE(impure.pseudomanifold_with_boundary);

    // edge {1,2} sits in three triangles
    PseudoClass book =
        classify(SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
    CHECK(book.pure);
    CHECK_FALSE(book.weak_pm_with_boundary);
    CHECK_FALSE(book.pseudomanifold);

    // two disjoint 3-cycles: weak pm, closed, but dual graph disconnected
    PseudoClass two = classify(SimplicialComplex::from_facets(
        6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
    CHECK(two.closed);
    CHECK_FALSE(two.dual_connected);
    CHECK_FALSE(two.pseudomanifold);
}

TEST_CASE("dual graph lists facets in canonical order") {
    DualGraph dg = dual_graph(corpus_generate("octahedron"));
    CHECK(dg.nodes.size() == 8);
    CHECK(dg.graph.n == 8);
    long long edges = 0;
    for (int v = 0; v < dg.graph.n; ++v) {
        CHECK(dg.graph.degree(v) == 3);  // each triangle meets three others
        edges += dg.graph.degree(v);
    }
    CHECK(edges / 2 == 12);
    CHECK(dg.graph.connected());

    CHECK_THROWS_AS(dual_graph(SimplicialComplex::from_facets(3, {{1, 2}, {3}})),
                    HypothesisError);
}

TEST_CASE("boundary complex") {
    // two triangles: the boundary is the 4-cycle 1-2-4-3
    SimplicialComplex bd = boundary_complex(kTwoTriangles);
    CHECK(bd == SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));

    // closed weak pseudomanifold: void boundary
    CHECK(boundary_complex(corpus_generate("octahedron")).is_void());

    // a single edge has its two endpoints as boundary
    CHECK(boundary_complex(SimplicialComplex::from_facets(2, {{1, 2}})) ==
          SimplicialComplex::from_facets(2, {{1}, {2}}));

    // full simplex: boundary is the boundary sphere
    CHECK(boundary_complex(SimplicialComplex::from_facets(4, {{1, 2, 3, 4}})) ==
          corpus_generate("simplex_boundary", {3}));
}

TEST_CASE("removal pairs pick the lex-least free ridge") {
    auto rp = find_removal_pair(kTwoTriangles, vs({2, 3, 4}));
    REQUIRE(rp.has_value());
    CHECK(rp->sigma == vs({2, 3, 4}));
    CHECK(rp->tau == vs({2, 4}));  // {2,3} also sits in {1,2,3}
    CHECK(rp->L == SimplicialComplex::from_facets(4, {{1, 2, 3}, {3, 4}}));
    CHECK_FALSE(rp->low_dim);

    // closed pseudomanifold: every ridge lies in a second facet
    SimplicialComplex oct = corpus_generate("octahedron");
    CHECK_FALSE(find_removal_pair(oct, vs({1, 2, 3})).has_value());

    // dimension-one removals are flagged
    SimplicialComplex path = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}});
    auto rp1 = find_removal_pair(path, vs({2, 3}));
    REQUIRE(rp1.has_value());
    CHECK(rp1->tau == vs({3}));
    CHECK(rp1->low_dim);

    CHECK_THROWS_AS(find_removal_pair(kTwoTriangles, vs({2, 3})), std::invalid_argument);
}

TEST_CASE("facet filtration peels down to the codimension-one skeleton") {
    SimplicialComplex D3 = SimplicialComplex::from_facets(4, {{1, 2, 3, 4}});
    FacetFiltration f = facet_filtration(D3);
    REQUIRE(f.steps.size() == 1);
    CHECK(f.steps[0].sigma == VertexSet::full(4));
    CHECK(f.steps[0].tau == vs({1, 2, 3}));
    CHECK(f.steps[0].after == corpus_generate("simplex_boundary", {3}));
    CHECK(f.skeleton_result == skeleton(D3, 2));
    CHECK_FALSE(f.low_dim);
}

TEST_CASE("facet filtration chains removal pairs") {
    SimplicialComplex K = delete_vertex(corpus_generate("octahedron"), 1).complex;
    FacetFiltration f = facet_filtration(K);
    CHECK(f.steps.size() == 4);
    SimplicialComplex cur = K;
    for (const FiltrationStep& s : f.steps) {
        auto rp = find_removal_pair(cur, s.sigma);
        REQUIRE(rp.has_value());
        CHECK(rp->tau == s.tau);
        cur = remove_face(cur, s.sigma);
        CHECK(cur == s.after);
    }
    CHECK(cur == f.skeleton_result);
    CHECK(f.skeleton_result == skeleton(K, 1));
}

TEST_CASE("facet filtration failure modes") {
    CHECK_THROWS_AS(facet_filtration(corpus_generate("octahedron")), HypothesisError);
    try {
        facet_filtration(corpus_generate("octahedron"));
    } catch (const HypothesisError& e) {
        CHECK(e.kind() == Hypothesis::ComponentWithoutLowDegreeNode);
    }
    try {
        facet_filtration(SimplicialComplex::from_facets(3, {{1, 2}, {3}}));
    } catch (const HypothesisError& e) {
        CHECK(e.kind() == Hypothesis::NotPure);
    }
    try {
        facet_filtration(
            SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
    } catch (const HypothesisError& e) {
        CHECK(e.kind() == Hypothesis::NotWeakPseudomanifold);
    }
}

TEST_CASE("low dimensional filtrations are flagged") {
    SimplicialComplex path = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}});
    FacetFiltration f = facet_filtration(path);
    CHECK(f.low_dim);
    CHECK(f.steps.size() == 2);
    CHECK(f.skeleton_result == skeleton(path, 0));
}

TEST_CASE("vertex deletion evidence") {
    SimplicialComplex oct = corpus_generate("octahedron");
    DeletionEvidence ev = deletion_hypotheses(oct, 1);
    CHECK(ev.vertex == 1);
    CHECK(ev.deleted.complex.vertex_count() == 5);
    CHECK(ev.pure);
    CHECK(ev.dimension == 2);
    CHECK(ev.weak_pm_with_nonempty_boundary);
    CHECK(ev.components_have_low_degree_node);
    CHECK(ev.all_pass);

    // deleting from a sphere always leaves usable boundary
    SimplicialComplex cs = corpus_generate("cyclic_sphere", {6, 4});
    for (int i = 1; i <= 6; ++i) CHECK(deletion_hypotheses(cs, i).all_pass);
}
