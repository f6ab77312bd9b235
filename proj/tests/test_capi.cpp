#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Exercises the shared-library surface only: no core headers, everything
// through the C interface and string renderings.
#include <polyprod.h>

#include <cstring>
#include <string>

TEST_CASE("version string") {
    CHECK(std::string(pp_version()) == "0.1.0");
}

TEST_CASE("complex handles") {
    pp_complex* c = nullptr;
    REQUIRE(pp_complex_parse("4\n1 2 3\n2 3 4\n", &c) == PP_OK);
    REQUIRE(c != nullptr);
    CHECK(pp_complex_m(c) == 4);
    CHECK(pp_complex_dim(c) == 2);
    CHECK(std::string(pp_complex_text(c)) == "4;1 2 3;2 3 4");

    // the document rendering parses back to the same complex
    pp_complex* again = nullptr;
    REQUIRE(pp_complex_parse(pp_complex_document(c), &again) == PP_OK);
    CHECK(std::string(pp_complex_text(again)) == std::string(pp_complex_text(c)));
    pp_complex_free(again);
    pp_complex_free(c);
}

TEST_CASE("json documents and corpus lookup") {
    pp_complex* c = nullptr;
    REQUIRE(pp_complex_parse(R"({"m": 3, "facets": [[1,2],[2,3],[1,3]]})", &c) == PP_OK);
    CHECK(pp_complex_dim(c) == 1);
    pp_complex_free(c);

    pp_complex* oct = nullptr;
    REQUIRE(pp_complex_corpus("octahedron", &oct) == PP_OK);
    CHECK(pp_complex_m(oct) == 6);
    CHECK(pp_complex_dim(oct) == 2);
    pp_complex_free(oct);

    pp_complex* cs = nullptr;
    REQUIRE(pp_complex_corpus("cyclic_sphere(6,4)", &cs) == PP_OK);
    CHECK(pp_complex_dim(cs) == 3);
    pp_complex_free(cs);
}

TEST_CASE("errors set pp_last_error and never crash") {
    pp_complex* c = nullptr;
    CHECK(pp_complex_parse("4\n1 2 banana\n", &c) == PP_ERR);
    CHECK(c == nullptr);
    CHECK(std::strlen(pp_last_error()) > 0);

    CHECK(pp_complex_parse(nullptr, &c) == PP_ERR);
    CHECK(pp_complex_parse("3\n1 2\n", nullptr) == PP_ERR);
    CHECK(pp_complex_corpus("dodecahedron", &c) == PP_ERR);
    CHECK(std::strlen(pp_last_error()) > 0);

    pp_report* r = nullptr;
    CHECK(pp_run("frobnicate", "3\n1 2\n", nullptr, &r) == PP_ERR);
    CHECK(r == nullptr);
    CHECK(pp_run(nullptr, "3\n1 2\n", nullptr, &r) == PP_ERR);
    CHECK(pp_run("mac", "not a document {", nullptr, &r) == PP_ERR);
    CHECK(pp_run("mac", "3\n1 2\n", "{not json", &r) == PP_ERR);
}

TEST_CASE("running commands on documents") {
    pp_report* r = nullptr;
    REQUIRE(pp_run("mac", "4\n1 2\n2 3\n3 4\n1 4\n", nullptr, &r) == PP_OK);
    CHECK(pp_report_exit_code(r) == 0);
    std::string json = pp_report_json(r);
    CHECK(json.find("\"1 + 2*t^3 + t^6\"") != std::string::npos);
    CHECK(json.find("\"command\": \"mac\"") != std::string::npos);
    CHECK(std::strlen(pp_report_text(r)) > 0);
    pp_report_free(r);
}

TEST_CASE("options json is honoured") {
    pp_report* r = nullptr;
    REQUIRE(pp_run_corpus("simplex_boundary(3)", nullptr, &r) == PP_OK);
    std::string doc = pp_report_json(r);
    pp_report_free(r);

    // decompose needs its facet option
    pp_report* d = nullptr;
    REQUIRE(pp_run("decompose", "4\n1 2 3\n2 3 4\n", R"({"facet": [2,3,4]})", &d) == PP_OK);
    CHECK(std::string(pp_report_json(d)).find("S^5 v S^6") != std::string::npos);
    pp_report_free(d);
    CHECK(pp_run("decompose", "4\n1 2 3\n2 3 4\n", nullptr, &d) == PP_ERR);

    pp_report* q = nullptr;
    REQUIRE(pp_run("quasitoric", "3\n1 2\n2 3\n1 3\n", R"({"n": 2})", &q) == PP_OK);
    CHECK(pp_report_exit_code(q) == 0);
    CHECK(std::string(pp_report_text(q)).find("Omega S^5") != std::string::npos);
    pp_report_free(q);

    pp_complex* cs = nullptr;
    REQUIRE(pp_complex_corpus("cyclic_sphere(6,4)", &cs) == PP_OK);
    pp_report* l = nullptr;
    REQUIRE(pp_run("loops", pp_complex_document(cs), R"({"cutoff": 10})", &l) == PP_OK);
    CHECK(std::string(pp_report_json(l)).find("\"truncated\": true") != std::string::npos);
    pp_report_free(l);
    pp_complex_free(cs);
}

TEST_CASE("undecided verdicts surface as exit code 2") {
    pp_report* r = nullptr;
    REQUIRE(pp_run_corpus("torus_seven", nullptr, &r) == PP_OK);
    pp_report_free(r);

    pp_complex* torus = nullptr;
    REQUIRE(pp_complex_corpus("torus_seven", &torus) == PP_OK);
    REQUIRE(pp_run("golod", pp_complex_document(torus), nullptr, &r) == PP_OK);
    CHECK(pp_report_exit_code(r) == PP_UNDECIDED);
    pp_report_free(r);
    pp_complex_free(torus);

    pp_complex* rp2 = nullptr;
    REQUIRE(pp_complex_corpus("rp2_six", &rp2) == PP_OK);
    REQUIRE(pp_run("prove-p", pp_complex_document(rp2), nullptr, &r) == PP_OK);
    CHECK(pp_report_exit_code(r) == PP_UNDECIDED);
    CHECK(std::string(pp_report_json(r)).find("\"proved\": false") != std::string::npos);
    pp_report_free(r);
    pp_complex_free(rp2);
}

TEST_CASE("corpus runner emits documents") {
    pp_report* r = nullptr;
    REQUIRE(pp_run_corpus("polygon(5)", nullptr, &r) == PP_OK);
    CHECK(pp_report_exit_code(r) == 0);
    CHECK(std::string(pp_report_json(r)).find("\"command\": \"corpus\"") != std::string::npos);
    pp_report_free(r);

    CHECK(pp_run_corpus("polygon(2)", nullptr, &r) == PP_ERR);
    CHECK(std::strlen(pp_last_error()) > 0);
}
