#pragma once

#include <stdexcept>
#include <string>

namespace polyprod {

/* Failure kinds for documented hypotheses. Operations whose preconditions
 * are mathematical hypotheses throw HypothesisError with a specific kind so
 * callers (and tests) can tell the failures apart. Malformed arguments
 * (bad vertex numbers, unknown names, ...) use std::invalid_argument. */
enum class Hypothesis {
    Disconnected,              // graph input not connected
    DegreeAboveBound,          // some vertex degree exceeds the stated bound
    NoVertexBelowBound,        // no vertex of degree strictly below the bound
    NotPure,
    NotWeakPseudomanifold,     // some codimension-one face in > 2 facets
    EmptyBoundary,             // filtration needs a facet of low dual degree
    NotPseudomanifold,
    NoRemovalPair,             // every ridge of σ lies in a second facet
    ComponentWithoutLowDegreeNode,
    SphereEvidenceFails,
    WedgeNotRecognized,
    DimensionTooLow,
    NeighbourlinessTooLow,
    MissingAttestation,        // pair-class attestation absent
    TorsionKuenneth,           // Kuenneth with torsion on both sides: not implemented
    LoopNotComputable,         // homology of a loop-space node is out of scope
    PolyProdNotComputable,     // polyhedral product homology for general pairs
    ProfileUnknown,            // atom carries no homology profile
    CapExceeded,               // subset enumeration would exceed the cap
    CutoffTooLow,
};

inline const char* hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::Disconnected: return "disconnected";
        case Hypothesis::DegreeAboveBound: return "degree-above-bound";
        case Hypothesis::NoVertexBelowBound: return "no-vertex-below-bound";
        case Hypothesis::NotPure: return "not-pure";
        case Hypothesis::NotWeakPseudomanifold: return "not-weak-pseudomanifold";
        case Hypothesis::EmptyBoundary: return "empty-boundary";
        case Hypothesis::NotPseudomanifold: return "not-pseudomanifold";
        case Hypothesis::NoRemovalPair: return "no-removal-pair";
        case Hypothesis::ComponentWithoutLowDegreeNode: return "component-without-low-degree-node";
        case Hypothesis::SphereEvidenceFails: return "sphere-evidence-fails";
        case Hypothesis::WedgeNotRecognized: return "wedge-not-recognized";
        case Hypothesis::DimensionTooLow: return "dimension-too-low";
        case Hypothesis::NeighbourlinessTooLow: return "neighbourliness-too-low";
        case Hypothesis::MissingAttestation: return "missing-attestation";
        case Hypothesis::TorsionKuenneth: return "torsion-kuenneth";
        case Hypothesis::LoopNotComputable: return "loop-not-computable";
        case Hypothesis::PolyProdNotComputable: return "polyprod-not-computable";
        case Hypothesis::ProfileUnknown: return "profile-unknown";
        case Hypothesis::CapExceeded: return "cap-exceeded";
        case Hypothesis::CutoffTooLow: return "cutoff-too-low";
    }
    return "unknown";
}

class HypothesisError : public std::runtime_error {
public:
    HypothesisError(Hypothesis kind, const std::string& detail)
        : std::runtime_error(std::string(hypothesis_name(kind)) + ": " + detail),
          kind_(kind) {}

    Hypothesis kind() const { return kind_; }

private:
    Hypothesis kind_;
};

}  // namespace polyprod
