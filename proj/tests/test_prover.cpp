#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "polyprod/certificate.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/prover.hpp"

using namespace polyprod;

namespace {
ProverResult prove_ma(const SimplicialComplex& K) {
    return p_membership(K, PairClass::moment_angle(K.vertex_count()));
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
    for (const std::string& n : notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}
}  // namespace

TEST_CASE("dimension at most one") {
    ProverResult r = prove_ma(corpus_generate("polygon", {5}));
    REQUIRE(r.proved);
    CHECK(r.certificate->rule_id == "dim1-complex");
    CHECK(r.certificate->grading == Grading::Proved);

    ProverResult pt = prove_ma(SimplicialComplex::from_facets(1, {{1}}));
    REQUIRE(pt.proved);
    CHECK(pt.certificate->rule_id == "dim1-complex");

    // nothing applies to the empty complex
    ProverResult e = p_membership(SimplicialComplex::empty_complex(2),
                                  PairClass::moment_angle(2));
    CHECK_FALSE(e.proved);
    REQUIRE(e.failure.has_value());
    CHECK_FALSE(e.failure->attempts.empty());
}

TEST_CASE("orientable surfaces") {
    ProverResult oct = prove_ma(corpus_generate("octahedron"));
    REQUIRE(oct.proved);
    CHECK(oct.certificate->rule_id == "orientable-surface");
    CHECK(oct.certificate->statement.find("genus 0") != std::string::npos);

    ProverResult torus = prove_ma(corpus_generate("torus_seven"));
    REQUIRE(torus.proved);
    CHECK(torus.certificate->rule_id == "orientable-surface");
    CHECK(torus.certificate->statement.find("genus 1") != std::string::npos);
}

TEST_CASE("two dimensional complexes with torsion-free subcomplexes") {
    // the full triangle: not a surface, dimension 2, complete 1-skeleton
    ProverResult r = prove_ma(SimplicialComplex::from_facets(3, {{1, 2, 3}}));
    REQUIRE(r.proved);
    CHECK(r.certificate->rule_id == "dim2-torsion-free");
}

TEST_CASE("low dimensional pseudomanifolds with incomplete 1-skeleton") {
    ProverResult r = prove_ma(corpus_generate("cross_polytope_boundary", {4}));
    REQUIRE(r.proved);
    CHECK(r.certificate->rule_id == "low-dim-pseudomanifold");
    CHECK(r.certificate->grading == Grading::Proved);
    CHECK(revalidate(*r.certificate).ok);
}

TEST_CASE("pseudomanifolds with boundary in low dimension") {
    // dimension 2 is already covered by the torsion-free rule, which fires first
    ProverResult two =
        prove_ma(SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}}));
    REQUIRE(two.proved);
    CHECK(two.certificate->rule_id == "dim2-torsion-free");

    // dimension 3 with boundary only matches the filtration rule
    ProverResult solid = prove_ma(SimplicialComplex::from_facets(4, {{1, 2, 3, 4}}));
    REQUIRE(solid.proved);
    CHECK(solid.certificate->rule_id == "pseudomanifold-with-boundary-low-dim");
}

TEST_CASE("neighbourly odd dimensional spheres") {
    ProverResult cs = prove_ma(corpus_generate("cyclic_sphere", {6, 4}));
    REQUIRE(cs.proved);
    CHECK(cs.certificate->rule_id == "sphere3-complete-skeleton");
    CHECK(cs.certificate->grading == Grading::Conditional);
    REQUIRE_FALSE(cs.certificate->unverified.empty());
    CHECK(cs.certificate->unverified[0].find("S^3") != std::string::npos);

    // boundary of the 4-simplex: verified sphere, so fully proved
    ProverResult bd = prove_ma(corpus_generate("simplex_boundary", {4}));
    REQUIRE(bd.proved);
    CHECK(bd.certificate->rule_id == "sphere3-complete-skeleton");
    CHECK(bd.certificate->grading == Grading::Proved);

    // 5-dimensional neighbourly sphere: same rule family, generic name
    ProverResult high = prove_ma(corpus_generate("cyclic_sphere", {8, 6}));
    REQUIRE(high.proved);
    CHECK(high.certificate->rule_id == "neighbourly-odd-sphere");
}

TEST_CASE("vertex deletion recursion") {
    // boundary of the 4-simplex on {1..5} with a pendant edge {5,6}:
    // impure, incomplete 1-skeleton, so only the deletion recursion fires
    SimplicialComplex bd4 = corpus_generate("simplex_boundary", {4});
    std::vector<std::vector<int>> facets;
    for (VertexSet f : bd4.facets()) facets.push_back(f.vertices());
    facets.push_back({5, 6});
    SimplicialComplex K = SimplicialComplex::from_facets(6, facets);

    ProverResult r = prove_ma(K);
    REQUIRE(r.proved);
    CHECK(r.certificate->rule_id == "vertex-deletion-induction");
    CHECK(r.certificate->premises.size() == 6);  // one sub-proof per vertex
    for (const Certificate& p : r.certificate->premises)
        CHECK_FALSE(p.rule_id.empty());
    CHECK(r.certificate->grading == Grading::Proved);
    CHECK(revalidate(*r.certificate).ok);
}

TEST_CASE("failure report on the six-vertex projective plane") {
    ProverResult r = prove_ma(corpus_generate("rp2_six"));
    REQUIRE_FALSE(r.proved);
    REQUIRE(r.failure.has_value());
    const ProofFailure& f = *r.failure;

    REQUIRE(f.witness.has_value());
    CHECK(f.witness->subset == VertexSet::full(6));
    CHECK(f.witness->degree == 1);
    CHECK(f.witness->torsion == std::vector<long long>{2});
    CHECK(f.witness->mac_degree == 8);
    CHECK(f.witness->profile.torsion(1) == std::vector<long long>{2});

    CHECK(f.deepest.find("torsion") != std::string::npos);
    CHECK(has_note(f.notes, "degree 8"));
    CHECK(has_note(f.notes, "2-torsion"));  // the known obstruction

    // every rule shows up in the attempt log exactly once
    std::vector<std::string> seen;
    for (const RuleAttempt& a : f.attempts) {
        CHECK(std::find(seen.begin(), seen.end(), a.rule_id) == seen.end());
        seen.push_back(a.rule_id);
        CHECK_FALSE(a.outcome.empty());
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("witness labels survive the deletion recursion") {
    // projective plane plus a pendant vertex: the recursion deletes vertex 7
    // and must report the witness in the original labels
    SimplicialComplex rp2 = corpus_generate("rp2_six");
    std::vector<std::vector<int>> facets;
    for (VertexSet f : rp2.facets()) facets.push_back(f.vertices());
    facets.push_back({1, 7});
    SimplicialComplex K = SimplicialComplex::from_facets(7, facets);

    ProverResult r = prove_ma(K);
    REQUIRE_FALSE(r.proved);
    REQUIRE(r.failure.has_value());
    REQUIRE(r.failure->witness.has_value());
    CHECK(r.failure->witness->subset == VertexSet::full(6));
    CHECK(r.failure->witness->torsion == std::vector<long long>{2});
}

TEST_CASE("general pair classes need the wedge attestation") {
    std::vector<PairAtom> bare(5);
    for (auto& a : bare) {
        a.name = "A";
        a.profile = HomologyProfile::sphere(1);
    }
    ProverResult missing =
        p_membership(corpus_generate("polygon", {5}), PairClass::general(bare));
    CHECK_FALSE(missing.proved);
    REQUIRE(missing.failure.has_value());
    CHECK(missing.failure->deepest.find("missing attestation") != std::string::npos);

    std::vector<PairAtom> attested = bare;
    for (auto& a : attested) a.sigma_in_w = true;
    ProverResult r =
        p_membership(corpus_generate("polygon", {5}), PairClass::general(attested));
    REQUIRE(r.proved);
    CHECK(r.certificate->grading == Grading::Conditional);
    bool lists_attestation = false;
    for (const std::string& u : r.certificate->unverified)
        if (u.find("attested") != std::string::npos) lists_attestation = true;
    CHECK(lists_attestation);

    CHECK_THROWS_AS(p_membership(corpus_generate("polygon", {5}),
                                 PairClass::general(std::vector<PairAtom>(3))),
                    std::invalid_argument);  // size mismatch
}

TEST_CASE("certificates survive serialization and revalidate") {
    for (const char* name : {"polygon", "octahedron", "cyclic_sphere"}) {
        SimplicialComplex K = std::string(name) == "polygon"
                                  ? corpus_generate(name, {5})
                              : std::string(name) == "cyclic_sphere"
                                  ? corpus_generate(name, {6, 4})
                                  : corpus_generate(name);
        CAPTURE(name);
        ProverResult r = prove_ma(K);
        REQUIRE(r.proved);
        Json j = certificate_to_json(*r.certificate);
        Certificate back = certificate_from_json(j);
        CHECK(certificate_to_json(back) == j);
        CHECK(revalidate(back).ok);
    }
}
