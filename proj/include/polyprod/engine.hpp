#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprod/certificate.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/pairs.hpp"

namespace polyprod {

extern const char* const kEngineVersion;

struct EngineOptions {
    std::string format = "text";  // "text" | "json"
    int cap = 20;                 // subset-enumeration guard
    std::optional<int> cutoff;    // loops: largest factor dimension kept
    std::optional<std::vector<int>> facet;  // decompose: the facet to remove
    std::optional<int> n;         // quasitoric: half the manifold dimension
    bool timing = false;          // opt-in; reports are byte-identical without it
};

/* Input document: either a JSON object {"m", "facets", "pairs"?, "name"?} or
 * plain text, the first non-comment line holding m and each further line one
 * facet as whitespace-separated vertices. '#' starts a comment line. The
 * pair class defaults to moment-angle. */
struct ParsedDocument {
    SimplicialComplex complex;
    PairClass pairs;
    std::optional<std::string> name;
};

ParsedDocument parse_document(const std::string& text);

// the parseable text form of a complex (the corpus command prints this)
std::string document_text(const SimplicialComplex& K);

struct Report {
    Json machine;       // canonical machine report, keys in alphabetical order
    std::string human;  // text rendering of the same content
    int exit_code = 0;  // 0 done/proved, 2 honest unknown or failure verdict
};

/* Commands: classify, homology, mac, rz, skeleton-mac, golod, decompose,
 * skeleton-decompose, loops, prove-p, quasitoric. Throws
 * std::invalid_argument or HypothesisError on unusable input; callers map
 * those to exit code 1. */
Report run_on_complex(const std::string& command, const ParsedDocument& doc,
                      const EngineOptions& opts);

// corpus NAME or NAME(p1,p2,...): emits the named complex as a document
Report run_corpus_command(const std::string& name, const EngineOptions& opts);

std::vector<std::string> engine_commands();

}  // namespace polyprod
