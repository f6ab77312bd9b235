#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "polyprod/certificate.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/corpus.hpp"
#include "polyprod/engine.hpp"
#include "polyprod/errors.hpp"

using namespace polyprod;

namespace {
ParsedDocument doc_of(const SimplicialComplex& K) {
    return parse_document(document_text(K));
}

ParsedDocument corpus_doc(const std::string& name, std::vector<long long> params = {}) {
    return doc_of(corpus_generate(name, params));
}
}  // namespace

TEST_CASE("text documents parse line by line") {
    ParsedDocument doc = parse_document("# a comment\n4\n1 2 3\n\n2 3 4\n");
    CHECK(doc.complex == SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}}));
    CHECK(doc.pairs.kind() == PairKind::MomentAngle);
    CHECK_FALSE(doc.name.has_value());

    // vertex-count-only document: the empty complex
    CHECK(parse_document("3\n").complex == SimplicialComplex::empty_complex(3));
}

TEST_CASE("text document errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_document("4\n1 2 x\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_document("banana\n1 2\n"),
                         doctest::Contains("line 1"), std::invalid_argument);
    // labels above m are caught when the complex is built, not by the lexer
    CHECK_THROWS_WITH_AS(parse_document("3\n1 5\n"),
                         doctest::Contains("out of range"), std::invalid_argument);
    CHECK_THROWS_AS(parse_document(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_document("# only comments\n"), std::invalid_argument);
}

TEST_CASE("json documents parse with names and pairs") {
    ParsedDocument doc = parse_document(
        R"({"m": 4, "facets": [[1,2,3],[2,3,4]], "name": "two-triangles"})");
    CHECK(doc.complex.vertex_count() == 4);
    CHECK(doc.name == std::string("two-triangles"));

    ParsedDocument real = parse_document(
        R"({"m": 3, "facets": [[1,2],[2,3]], "pairs": {"kind": "real", "m": 3}})");
    CHECK(real.pairs.kind() == PairKind::Real);

    CHECK_THROWS_AS(parse_document(R"({"facets": []})"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_document(R"({"m": 3, "facets": [[1]], "pairs": {"kind": "real", "m": 5}})"),
        std::invalid_argument);
}

TEST_CASE("document text round trips") {
    for (const char* name : {"octahedron", "rp2_six", "torus_seven"}) {
        SimplicialComplex K = corpus_generate(name);
        CAPTURE(name);
        CHECK(parse_document(document_text(K)).complex == K);
    }
    CHECK(parse_document(document_text(SimplicialComplex::empty_complex(2))).complex ==
          SimplicialComplex::empty_complex(2));
}

TEST_CASE("reports share one envelope") {
    Report rep = run_on_complex("mac", corpus_doc("octahedron"), EngineOptions{});
    CHECK(rep.machine["command"] == "mac");
    CHECK(rep.machine["engine"]["name"] == "polyprod");
    CHECK(rep.machine["engine"]["version"] == std::string(kEngineVersion));
    CHECK(rep.machine["input"]["complex"] ==
          complex_to_json(corpus_generate("octahedron")));
    CHECK_FALSE(rep.machine.contains("timing_ms"));
    CHECK(rep.exit_code == 0);
    CHECK_FALSE(rep.human.empty());

    EngineOptions timed;
    timed.timing = true;
    Report with_time = run_on_complex("mac", corpus_doc("octahedron"), timed);
    CHECK(with_time.machine.contains("timing_ms"));

    CHECK_THROWS_AS(run_on_complex("frobnicate", corpus_doc("octahedron"), EngineOptions{}),
                    std::invalid_argument);
}

TEST_CASE("reports are byte deterministic") {
    for (const char* cmd : {"classify", "homology", "mac", "golod", "prove-p"}) {
        CAPTURE(cmd);
        Report a = run_on_complex(cmd, corpus_doc("torus_seven"), EngineOptions{});
        setenv("POLYPROD_THREADS", "3", 1);
        Report b = run_on_complex(cmd, corpus_doc("torus_seven"), EngineOptions{});
        unsetenv("POLYPROD_THREADS");
        CHECK(a.machine.dump() == b.machine.dump());
        CHECK(a.human == b.human);
    }
}

TEST_CASE("classify report") {
    Report rep = run_on_complex("classify", corpus_doc("octahedron"), EngineOptions{});
    CHECK(rep.machine["result"]["pseudomanifold"] == true);
    CHECK(rep.machine["result"]["surface"]["orientable"] == true);
    CHECK(rep.machine["result"]["surface"]["genus"] == 0);
    CHECK(rep.machine["result"]["f_vector"] == Json::array({1, 6, 12, 8}));
    CHECK(rep.human.find("surface: orientable, genus 0") != std::string::npos);

    Report torus = run_on_complex("classify", corpus_doc("torus_seven"), EngineOptions{});
    CHECK(torus.machine["result"]["surface"]["genus"] == 1);
}

TEST_CASE("homology and subset-sum reports") {
    Report h = run_on_complex("homology", corpus_doc("rp2_six"), EngineOptions{});
    CHECK(h.machine["result"]["reduced_homology"] ==
          Json::array({Json::array({1, 0, {2}})}));

    Report mac = run_on_complex("mac", corpus_doc("polygon", {4}), EngineOptions{});
    CHECK(mac.machine["result"]["poincare"] == "1 + 2*t^3 + t^6");
    CHECK(mac.machine["result"]["variant"] == "moment-angle");
    CHECK(mac.machine["result"]["contributions"].size() == 3);

    Report rz = run_on_complex("rz", corpus_doc("polygon", {4}), EngineOptions{});
    CHECK(rz.machine["result"]["poincare"] == "1 + 2*t + t^2");

    Report sk =
        run_on_complex("skeleton-mac", corpus_doc("cyclic_sphere", {6, 4}), EngineOptions{});
    CHECK(sk.machine["result"]["total"] == Json::array({Json::array({5, 2, Json::array()})}));
}

TEST_CASE("verdict exit codes") {
    CHECK(run_on_complex("golod", corpus_doc("octahedron"), EngineOptions{}).exit_code == 0);
    Report unknown = run_on_complex("golod", corpus_doc("torus_seven"), EngineOptions{});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.machine["result"]["verdict"] == "Unknown");

    CHECK(run_on_complex("prove-p", corpus_doc("octahedron"), EngineOptions{}).exit_code == 0);
    Report failed = run_on_complex("prove-p", corpus_doc("rp2_six"), EngineOptions{});
    CHECK(failed.exit_code == 2);
    CHECK(failed.machine["result"]["proved"] == false);
    CHECK(failed.machine["result"]["failure"]["witness"]["mac_degree"] == 8);
    CHECK(failed.human.find("Z/2") != std::string::npos);
}

TEST_CASE("prove-p report embeds a revalidatable certificate") {
    Report rep = run_on_complex("prove-p", corpus_doc("cyclic_sphere", {6, 4}),
                                EngineOptions{});
    CHECK(rep.machine["result"]["proved"] == true);
    Certificate c = certificate_from_json(rep.machine["result"]["certificate"]);
    CHECK(c.rule_id == "sphere3-complete-skeleton");
    CHECK(revalidate(c).ok);
}

TEST_CASE("loops report") {
    Report bd = run_on_complex("loops", corpus_doc("simplex_boundary", {3}), EngineOptions{});
    CHECK(bd.machine["result"]["skeleton_contractible"] == true);
    CHECK(bd.machine["result"]["hilton_milnor"]["factors"] ==
          Json::array({Json{{"multiplicity", 1}, {"sphere_dim", 7}, {"weight", 1}}}));
    CHECK(bd.human.find("Omega S^7") != std::string::npos);

    EngineOptions opts;
    opts.cutoff = 10;
    Report cs = run_on_complex("loops", corpus_doc("cyclic_sphere", {6, 4}), opts);
    CHECK(cs.machine["result"]["skeleton_wedge"]["display"] == "S^5 v S^5");
    auto factors = cs.machine["result"]["hilton_milnor"]["factors"];
    REQUIRE(factors.size() == 2);
    CHECK(factors[0]["sphere_dim"] == 5);
    CHECK(factors[0]["multiplicity"] == 2);
    CHECK(factors[1]["sphere_dim"] == 9);
    CHECK(cs.machine["result"]["hilton_milnor"]["truncated"] == true);

    CHECK_THROWS_AS(run_on_complex("loops", corpus_doc("octahedron"), EngineOptions{}),
                    HypothesisError);
}

TEST_CASE("decompose report cross-checks itself") {
    EngineOptions opts;
    opts.facet = std::vector<int>{2, 3, 4};
    ParsedDocument doc = parse_document("4\n1 2 3\n2 3 4\n");
    Report rep = run_on_complex("decompose", doc, opts);
    CHECK(rep.machine["result"]["expr"]["display"] == "S^5 v S^6 v Z{m=4,facets=2}");
    CHECK(rep.machine["result"]["cross_check"]["consistent"] == true);
    CHECK(rep.machine["result"]["removed_facet"] == Json::array({2, 3, 4}));

    CHECK_THROWS_AS(run_on_complex("decompose", doc, EngineOptions{}),
                    std::invalid_argument);  // --facet is required
    EngineOptions bad;
    bad.facet = std::vector<int>{1, 4};
    CHECK_THROWS_AS(run_on_complex("decompose", doc, bad), std::invalid_argument);
}

TEST_CASE("skeleton decomposition report") {
    ParsedDocument doc = parse_document("4\n1 2 3 4\n");
    Report rep = run_on_complex("skeleton-decompose", doc, EngineOptions{});
    CHECK(rep.machine["result"]["expr"]["display"] == "S^7");
    CHECK(rep.machine["result"]["cross_check"]["consistent"] == true);
    CHECK_THROWS_AS(
        run_on_complex("skeleton-decompose", corpus_doc("octahedron"), EngineOptions{}),
        HypothesisError);
}

TEST_CASE("quasitoric report") {
    EngineOptions n2;
    n2.n = 2;
    Report tri = run_on_complex("quasitoric", corpus_doc("polygon", {3}), n2);
    CHECK(tri.exit_code == 0);
    CHECK(tri.machine["result"]["p_verdict"] == "in-P");
    CHECK(tri.machine["result"]["torus_rank"] == 1);
    CHECK(tri.human.find("Omega S^5") != std::string::npos);

    Report sq = run_on_complex("quasitoric", corpus_doc("polygon", {4}), n2);
    CHECK(sq.machine["result"]["torus_rank"] == 2);
    CHECK(sq.machine["result"]["zk"]["poincare"] == "1 + 2*t^3 + t^6");
    CHECK(sq.machine["result"]["certificate"]["rule"] == "quasitoric-loop-splitting");

    EngineOptions n3;
    n3.n = 3;
    Report s7 = run_on_complex("quasitoric", corpus_doc("simplex_boundary", {3}), n3);
    CHECK(s7.human.find("Omega S^7") != std::string::npos);

    // the complex must triangulate a sphere of dimension n-1
    CHECK_THROWS_AS(run_on_complex("quasitoric", corpus_doc("polygon", {4}), n3),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_on_complex("quasitoric", corpus_doc("polygon", {4}), EngineOptions{}),
                    std::invalid_argument);  // --n is required

    // outside the covered manifold dimensions the verdict stays honest
    EngineOptions n5;
    n5.n = 5;
    Report high = run_on_complex("quasitoric", corpus_doc("cyclic_sphere", {8, 5}), n5);
    CHECK(high.exit_code == 2);
    CHECK(high.machine["result"]["p_verdict"] == "unknown");
}

TEST_CASE("corpus command emits parseable documents") {
    Report rep = run_corpus_command("octahedron", EngineOptions{});
    CHECK(rep.machine["result"]["complex"] == complex_to_json(corpus_generate("octahedron")));
    std::string text = rep.machine["result"]["document"];
    CHECK(parse_document(text).complex == corpus_generate("octahedron"));
    CHECK(rep.human.find("# octahedron") == 0);

    Report cs = run_corpus_command("cyclic_sphere(6,4)", EngineOptions{});
    CHECK(parse_document(cs.machine["result"]["document"].get<std::string>()).complex ==
          corpus_generate("cyclic_sphere", {6, 4}));

    CHECK_THROWS_AS(run_corpus_command("dodecahedron", EngineOptions{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_corpus_command("polygon(2)", EngineOptions{}),
                    std::invalid_argument);
}
