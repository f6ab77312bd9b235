#include "polyprod.h"

#include <exception>
#include <string>
#include <utility>

#include "polyprod/corpus.hpp"
#include "polyprod/engine.hpp"

using namespace polyprod;

struct pp_complex {
    SimplicialComplex complex = SimplicialComplex::empty_complex(0);
    std::string text;
    std::string document;
};

struct pp_report {
    std::string json;
    std::string text;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

int fail(const std::string& msg) {
    g_last_error = msg;
    return PP_ERR;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return PP_OK;
    } catch (const std::exception& e) {
        return fail(e.what());
    } catch (...) {
        return fail("unknown error");
    }
}

EngineOptions options_from_json(const char* options_json) {
    EngineOptions o;
    if (!options_json || !*options_json) return o;
    Json j = Json::parse(options_json);
    if (!j.is_object()) throw std::invalid_argument("options must be a JSON object");
    if (j.contains("format")) o.format = j.at("format").get<std::string>();
    if (j.contains("cap")) o.cap = j.at("cap").get<int>();
    if (j.contains("cutoff") && !j.at("cutoff").is_null())
        o.cutoff = j.at("cutoff").get<int>();
    if (j.contains("facet") && !j.at("facet").is_null())
        o.facet = j.at("facet").get<std::vector<int>>();
    if (j.contains("n") && !j.at("n").is_null()) o.n = j.at("n").get<int>();
    if (j.contains("timing")) o.timing = j.at("timing").get<bool>();
    return o;
}

pp_report* pack(Report&& rep) {
    auto* out = new pp_report;
    out->json = rep.machine.dump(2);
    out->json.push_back('\n');
    out->text = std::move(rep.human);
    out->exit_code = rep.exit_code;
    return out;
}

SimplicialComplex corpus_by_spec(const std::string& name) {
    // reuse the engine's NAME(p1,p2,...) parsing via the corpus report
    EngineOptions opts;
    Report rep = run_corpus_command(name, opts);
    return complex_from_json(rep.machine.at("result").at("complex"));
}

}  // namespace

extern "C" {

const char* pp_version(void) { return kEngineVersion; }

const char* pp_last_error(void) { return g_last_error.c_str(); }

int pp_complex_parse(const char* document, pp_complex** out) {
    if (!document || !out) return fail("null argument");
    return guarded([&] {
        ParsedDocument doc = parse_document(document);
        auto* c = new pp_complex;
        c->complex = std::move(doc.complex);
        c->text = c->complex.to_text();
        c->document = document_text(c->complex);
        *out = c;
    });
}

int pp_complex_corpus(const char* name, pp_complex** out) {
    if (!name || !out) return fail("null argument");
    return guarded([&] {
        auto* c = new pp_complex;
        c->complex = corpus_by_spec(name);
        c->text = c->complex.to_text();
        c->document = document_text(c->complex);
        *out = c;
    });
}

const char* pp_complex_text(const pp_complex* c) { return c ? c->text.c_str() : ""; }

const char* pp_complex_document(const pp_complex* c) {
    return c ? c->document.c_str() : "";
}

int pp_complex_m(const pp_complex* c) { return c ? c->complex.vertex_count() : -1; }

int pp_complex_dim(const pp_complex* c) { return c ? c->complex.dim() : -2; }

void pp_complex_free(pp_complex* c) { delete c; }

int pp_run(const char* command, const char* document, const char* options_json,
           pp_report** out) {
    if (!command || !document || !out) return fail("null argument");
    return guarded([&] {
        ParsedDocument doc = parse_document(document);
        EngineOptions opts = options_from_json(options_json);
        *out = pack(run_on_complex(command, doc, opts));
    });
}

int pp_run_corpus(const char* name, const char* options_json, pp_report** out) {
    if (!name || !out) return fail("null argument");
    return guarded([&] {
        EngineOptions opts = options_from_json(options_json);
        *out = pack(run_corpus_command(name, opts));
    });
}

const char* pp_report_json(const pp_report* r) { return r ? r->json.c_str() : ""; }

const char* pp_report_text(const pp_report* r) { return r ? r->text.c_str() : ""; }

int pp_report_exit_code(const pp_report* r) { return r ? r->exit_code : PP_ERR; }

void pp_report_free(pp_report* r) { delete r; }

}  // extern "C"
