#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyprod/complex.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/pairs.hpp"
#include "polyprod/space_expr.hpp"

namespace polyprod {

using Json = nlohmann::json;

enum class Grading { Proved, Conditional };

const char* grading_name(Grading g);

/* A re-runnable computation: `check` names an entry in the fact registry,
 * `args` its serialized input, `expected` the output recorded when the
 * certificate was built. revalidate() re-runs every fact and compares
 * exactly. */
struct ComputedFact {
    std::string check;
    Json args;
    Json expected;
};

/* A hypothesis consumed without verification, typically a homotopy-level
 * statement the engine cannot decide. Any attestation on the path to the
 * goal downgrades the grading to Conditional. */
struct Attestation {
    std::string name;
    std::string statement;
};

struct Certificate {
    std::string goal;
    std::string rule_id;
    std::string statement;
    Grading grading = Grading::Proved;
    std::vector<std::string> unverified;  // what Conditional is conditional on
    std::vector<ComputedFact> facts;
    std::vector<Attestation> attestations;
    std::vector<Certificate> premises;
    std::vector<std::string> notes;
};

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

struct Revalidation {
    bool ok = true;
    long long facts_checked = 0;
    std::vector<std::string> failures;
};

// re-runs every computed fact in the certificate and its premises
Revalidation revalidate(const Certificate& c, int cap = 20);

/* Serialization shared by certificates and reports. Profiles are arrays
 * [degree, rank, [torsion...]] sorted by degree; complexes are {"m", "facets"}
 * with the canonical facet order ({"void": true} for the void complex). */
Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);
Json profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const Json& j);
Json pairs_to_json(const PairClass& p);
PairClass pairs_from_json(const Json& j);
Json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const Json& j);

// the registry behind ComputedFact::check; throws std::invalid_argument for
// unknown names
Json run_fact_check(const std::string& check, const Json& args, int cap = 20);

// runs the check now and freezes the result as the expectation
ComputedFact make_fact(const std::string& check, Json args, int cap = 20);

}  // namespace polyprod
