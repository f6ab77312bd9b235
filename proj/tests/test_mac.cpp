#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <vector>

#include "oracle.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/mac.hpp"

using namespace polyprod;

namespace {
VertexSet vs(std::initializer_list<int> l) { return VertexSet::of(l); }

std::map<int, long long> ranks_of(const HomologyProfile& p) {
    std::map<int, long long> out;
    for (int d : p.degrees())
        if (p.rank(d) != 0) out[d] = p.rank(d);
    return out;
}

void check_against_subset_sum(const SimplicialComplex& K) {
    CAPTURE(K.to_text());
    CHECK(ranks_of(mac_homology(K).total) == oracle::subset_sum_ranks(K, false, false));
    CHECK(ranks_of(rz_homology(K).total) == oracle::subset_sum_ranks(K, true, false));
    CHECK(ranks_of(skeleton_mac_homology(K).total) ==
          oracle::subset_sum_ranks(K, false, true));
}
}  // namespace

TEST_CASE("moment-angle complexes over simplex boundaries are single spheres") {
    // m vertices give S^{2m-1}
    for (int m = 3; m <= 6; ++m) {
        CAPTURE(m);
        MacHomology mac = mac_homology(corpus_generate("simplex_boundary", {m - 1}));
        CHECK(mac.total == HomologyProfile::sphere(2 * m - 1));
        REQUIRE(mac.contributions.size() == 1);
        CHECK(mac.contributions[0].I == VertexSet::full(m));
        CHECK(mac.contributions[0].shift == m + 1);
    }
}

TEST_CASE("moment-angle homology of the 4-gon") {
    MacHomology mac = mac_homology(corpus_generate("polygon", {4}));
    CHECK(mac.total.poincare() == "1 + 2*t^3 + t^6");
    CHECK(mac.total.torsion_free());
    CHECK(ranks_of(mac.total) == std::map<int, long long>{{3, 2}, {6, 1}});
}

TEST_CASE("moment-angle homology of the octahedron") {
    MacHomology mac = mac_homology(corpus_generate("octahedron"));
    CHECK(mac.total.poincare() == "1 + 3*t^3 + 3*t^6 + t^9");
    CHECK(mac.total.torsion_free());
    CHECK(mac.subsets_enumerated == 37);  // 63 nonempty subsets, 26 faces

    REQUIRE(mac.contributions.size() == 7);
    CHECK(mac.contributions[0].I == vs({1, 4}));
    CHECK(mac.contributions[1].I == vs({2, 5}));
    CHECK(mac.contributions[2].I == vs({3, 6}));
    CHECK(mac.contributions[3].I == vs({1, 2, 4, 5}));
    CHECK(mac.contributions[6].I == VertexSet::full(6));
    for (const SubsetContribution& c : mac.contributions)
        CHECK_FALSE(c.profile.trivial());
    CHECK(mac.contributions[3].shift == 5);
    CHECK(mac.contributions[3].profile.rank(6) == 1);  // 4-cycle, shifted
}

TEST_CASE("torsion lands in degree 8 over the six-vertex projective plane") {
    MacHomology mac = mac_homology(corpus_generate("rp2_six"));
    CHECK(mac.total.torsion(8) == std::vector<long long>{2});
    for (int d : mac.total.degrees())
        if (d != 8) CHECK(mac.total.torsion(d).empty());

    bool found_full = false;
    for (const SubsetContribution& c : mac.contributions) {
        if (c.I == VertexSet::full(6)) {
            found_full = true;
            CHECK(c.shift == 7);
            CHECK(c.profile.torsion(8) == std::vector<long long>{2});
            CHECK(c.profile.rank(8) == 0);
        } else {
            CHECK(c.profile.torsion_free());
        }
    }
    CHECK(found_full);
}

TEST_CASE("skeleton variant drops the full subset") {
    MacHomology sk = skeleton_mac_homology(corpus_generate("simplex_boundary", {3}));
    CHECK(sk.total.trivial());
    CHECK(sk.contributions.empty());

    MacHomology oct = skeleton_mac_homology(corpus_generate("octahedron"));
    CHECK(ranks_of(oct.total) == std::map<int, long long>{{3, 3}, {6, 3}});

    MacHomology cs = skeleton_mac_homology(corpus_generate("cyclic_sphere", {6, 4}));
    CHECK(ranks_of(cs.total) == std::map<int, long long>{{5, 2}});
}

TEST_CASE("real coordinate variant shifts by one") {
    MacHomology rz = rz_homology(corpus_generate("polygon", {4}));
    CHECK(rz.total.poincare() == "1 + 2*t + t^2");  // the torus

    MacHomology oct = rz_homology(corpus_generate("octahedron"));
    CHECK(oct.total.poincare() == "1 + 3*t + 3*t^2 + t^3");  // the 3-torus

    MacHomology cs = rz_homology(corpus_generate("cyclic_sphere", {6, 4}));
    CHECK(ranks_of(cs.total) == std::map<int, long long>{{2, 2}, {4, 1}});
    CHECK(cs.total.torsion_free());
}

TEST_CASE("subset sums match the brute-force oracle") {
    check_against_subset_sum(corpus_generate("polygon", {4}));
    check_against_subset_sum(corpus_generate("polygon", {6}));
    check_against_subset_sum(corpus_generate("simplex_boundary", {3}));
    check_against_subset_sum(corpus_generate("octahedron"));
    check_against_subset_sum(corpus_generate("rp2_six"));
    check_against_subset_sum(corpus_generate("torus_seven"));
    check_against_subset_sum(corpus_generate("cyclic_sphere", {6, 4}));
    for (std::uint64_t seed = 40; seed < 55; ++seed)
        check_against_subset_sum(oracle::random_complex(seed, 6, 7, 4));
}

TEST_CASE("thread fan-out does not change results") {
    SimplicialComplex K = corpus_generate("torus_seven");
    MacHomology base = mac_homology(K);
    setenv("POLYPROD_THREADS", "4", 1);
    MacHomology threaded = mac_homology(K);
    unsetenv("POLYPROD_THREADS");
    CHECK(base.total == threaded.total);
    REQUIRE(base.contributions.size() == threaded.contributions.size());
    for (size_t i = 0; i < base.contributions.size(); ++i)
        CHECK(base.contributions[i].I == threaded.contributions[i].I);
}

TEST_CASE("vertex cap guards the enumeration") {
    CHECK_THROWS_AS(mac_homology(corpus_generate("octahedron"), 5), HypothesisError);
    try {
        mac_homology(corpus_generate("octahedron"), 5);
    } catch (const HypothesisError& e) {
        CHECK(e.kind() == Hypothesis::CapExceeded);
    }
    CHECK_THROWS_AS(rz_homology(SimplicialComplex::empty_complex(30)), HypothesisError);
}

TEST_CASE("sphere evidence grading") {
    SphereEvidence oct = sphere_evidence(corpus_generate("octahedron"), 2);
    CHECK(oct.grade == SphereGrade::Verified);
    CHECK(oct.closed_pseudomanifold);
    CHECK(oct.homology_matches);

    SphereEvidence bdry = sphere_evidence(corpus_generate("simplex_boundary", {4}), 3);
    CHECK(bdry.grade == SphereGrade::Verified);
    CHECK(bdry.boundary_of_simplex);

    SphereEvidence cs = sphere_evidence(corpus_generate("cyclic_sphere", {6, 4}), 3);
    CHECK(cs.grade == SphereGrade::HomologyLevel);
    CHECK(cs.links_verified);

    SphereEvidence high = sphere_evidence(corpus_generate("cyclic_sphere", {8, 6}), 5);
    CHECK(high.grade == SphereGrade::HomologyLevel);

    CHECK(sphere_evidence(corpus_generate("torus_seven"), 2).grade == SphereGrade::Fails);
    CHECK(sphere_evidence(corpus_generate("rp2_six"), 2).grade == SphereGrade::Fails);
    CHECK(sphere_evidence(corpus_generate("octahedron"), 3).grade == SphereGrade::Fails);

    SphereEvidence pts = sphere_evidence(SimplicialComplex::from_facets(2, {{1}, {2}}), 0);
    CHECK(pts.grade == SphereGrade::Verified);

    CHECK(sphere_evidence(corpus_generate("polygon", {6}), 1).grade ==
          SphereGrade::Verified);
}

TEST_CASE("boundary of simplex recognition") {
    CHECK(is_boundary_of_simplex(corpus_generate("simplex_boundary", {2})));
    CHECK(is_boundary_of_simplex(corpus_generate("simplex_boundary", {5})));
    CHECK_FALSE(is_boundary_of_simplex(corpus_generate("octahedron")));
    CHECK_FALSE(is_boundary_of_simplex(SimplicialComplex::from_facets(3, {{1, 2, 3}})));
    // a ghost vertex disqualifies: the product sees it
    SimplicialComplex ghost = SimplicialComplex::from_facets(
        5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK_FALSE(is_boundary_of_simplex(ghost));
    CHECK_FALSE(is_boundary_of_simplex(SimplicialComplex::from_facets(2, {{1}, {2}})) ==
                false);  // S^0 is the boundary of an edge
}

TEST_CASE("vertex links") {
    Subcomplex link = link_complex(corpus_generate("octahedron"), 1);
    CHECK(link.vertex_map == std::vector<int>{2, 3, 5, 6});
    CHECK(link.complex ==
          SimplicialComplex::from_facets(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
}

TEST_CASE("desuspension hypotheses") {
    DesuspensionCheck cs = desuspension_criterion(corpus_generate("cyclic_sphere", {6, 4}));
    CHECK(cs.hypothesis_holds);
    CHECK(cs.k == 1);
    CHECK(cs.odd_dimension);
    CHECK(cs.pseudomanifold);
    CHECK(cs.neighbourly_enough);
    CHECK(cs.inner.holds);
    CHECK(cs.inner.degree == 1);

    DesuspensionCheck high = desuspension_criterion(corpus_generate("cyclic_sphere", {8, 6}));
    CHECK(high.hypothesis_holds);
    CHECK(high.k == 2);
    CHECK(high.inner.holds);
    CHECK(high.inner.degree == 2);

    CHECK_FALSE(desuspension_criterion(corpus_generate("octahedron")).odd_dimension);
    CHECK_FALSE(desuspension_criterion(corpus_generate("octahedron")).hypothesis_holds);
    DesuspensionCheck cross = desuspension_criterion(corpus_generate("cross_polytope_boundary", {4}));
    CHECK(cross.odd_dimension);
    CHECK_FALSE(cross.neighbourly_enough);
    CHECK_FALSE(cross.hypothesis_holds);
}

TEST_CASE("golod verdicts") {
    GolodStatus bd = golod_status(corpus_generate("simplex_boundary", {3}));
    CHECK(bd.verdict == GolodVerdict::Golod);
    CHECK(bd.rule_id == "sphere-golod-dichotomy");
    CHECK_FALSE(bd.conditional);

    GolodStatus oct = golod_status(corpus_generate("octahedron"));
    CHECK(oct.verdict == GolodVerdict::NotGolod);
    CHECK(oct.rule_id == "sphere-golod-dichotomy");
    bool undecided_note = false;
    for (const std::string& n : oct.notes)
        if (n.find("undecided") != std::string::npos) undecided_note = true;
    CHECK(undecided_note);

    GolodStatus cs = golod_status(corpus_generate("cyclic_sphere", {6, 4}));
    CHECK(cs.verdict == GolodVerdict::MinimallyNonGolod);
    CHECK(cs.rule_id == "odd-sphere-wedge-refinement");
    CHECK(cs.conditional);
    REQUIRE(cs.inner.has_value());
    CHECK(cs.inner->holds);

    CHECK(golod_status(corpus_generate("polygon", {3})).verdict == GolodVerdict::Golod);
    CHECK(golod_status(corpus_generate("polygon", {5})).verdict == GolodVerdict::NotGolod);
    CHECK(golod_status(corpus_generate("torus_seven")).verdict == GolodVerdict::Unknown);
    CHECK(golod_status(corpus_generate("rp2_six")).verdict == GolodVerdict::Unknown);
    CHECK(golod_status(corpus_generate("torus_seven")).rule_id.empty());

    GolodStatus cross = golod_status(corpus_generate("cross_polytope_boundary", {4}));
    CHECK(cross.verdict == GolodVerdict::NotGolod);
    CHECK(cross.conditional);  // only homology-level evidence for S^3
}

TEST_CASE("torsion freeness transfers to the skeleton") {
    SimplicialComplex two = SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}});
    TorsionTransfer t = torsion_transfer_check(two);
    CHECK(t.consistent);
    CHECK(t.full_torsion_free);
    CHECK(t.skeleton_torsion_free);

    TorsionTransfer oct1 =
        torsion_transfer_check(delete_vertex(corpus_generate("octahedron"), 1).complex);
    CHECK(oct1.consistent);
}
