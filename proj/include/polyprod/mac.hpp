#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/pseudo.hpp"

namespace polyprod {

enum class MacVariant { MomentAngle, Real, Skeleton };

const char* mac_variant_name(MacVariant v);

/* One subset summand of the stable decomposition: the reduced homology of
 * K_I, shifted. Only subsets I that are not faces of K contribute. */
struct SubsetContribution {
    VertexSet I;
    int shift = 0;
    HomologyProfile profile;  // already shifted
};

struct MacHomology {
    MacVariant variant = MacVariant::MomentAngle;
    HomologyProfile total;
    std::vector<SubsetContribution> contributions;  // nonzero ones, by (|I|, lex)
    long long subsets_enumerated = 0;
};

/* Reduced homology of the moment-angle complex over K by the subset sum
 *   H̃_j = ⊕_{I ∉ K} H̃_{j-|I|-1}(K_I).
 * Exponential in the vertex count; refuses to run past `cap` vertices.
 * Set POLYPROD_THREADS to fan the enumeration out over threads (the result
 * is identical either way). */
MacHomology mac_homology(const SimplicialComplex& K, int cap = 20);

// Same sum with I = [m] omitted: the (m + n)-skeleton of the moment-angle
// complex when K is a closed n-pseudomanifold on [m].
MacHomology skeleton_mac_homology(const SimplicialComplex& K, int cap = 20);

// Real coordinate version: shift is 1 instead of |I|+1.
MacHomology rz_homology(const SimplicialComplex& K, int cap = 20);

enum class SphereGrade { Verified, HomologyLevel, Fails };

const char* sphere_grade_name(SphereGrade g);

/* Evidence that K triangulates S^n.
 *   n <= 2      full recognition (two points / single cycle / closed
 *               orientable genus-0 surface) -> Verified
 *   n == 3      closed pseudomanifold, homology of S^3, all vertex links
 *               verified as S^2 -> HomologyLevel (3-sphere recognition is
 *               out of scope)
 *   n >= 4      closed pseudomanifold with matching homology -> HomologyLevel
 * The boundary of a simplex is Verified in any dimension. */
struct SphereEvidence {
    SphereGrade grade = SphereGrade::Fails;
    int n = -1;
    bool boundary_of_simplex = false;
    bool closed_pseudomanifold = false;
    bool homology_matches = false;
    bool links_verified = false;  // n == 3 only
    std::vector<std::string> notes;
};

SphereEvidence sphere_evidence(const SimplicialComplex& K, int n);

// true iff K is ∂Δ^{m-1} on its full vertex set (no ghosts)
bool is_boundary_of_simplex(const SimplicialComplex& K);

// link of v as a complex on the re-indexed support of the faces around v
Subcomplex link_complex(const SimplicialComplex& K, int v);

/* Inner check used by the neighbourly criteria: every proper full subcomplex
 * has free homology concentrated in a single degree k. */
struct DesuspensionInner {
    bool holds = false;
    int degree = -1;
    std::optional<VertexSet> violating_subset;
    long long subsets_checked = 0;
};

enum class GolodVerdict { Golod, MinimallyNonGolod, NotGolod, Unknown };

const char* golod_verdict_name(GolodVerdict v);

struct GolodStatus {
    GolodVerdict verdict = GolodVerdict::Unknown;
    bool conditional = false;  // verdict rests on homology-level sphere evidence
    std::string rule_id;
    std::string justification;
    std::vector<std::string> notes;
    SphereEvidence evidence;
    std::optional<DesuspensionInner> inner;
};

struct DesuspensionCheck {
    bool hypothesis_holds = false;  // odd-dim pseudomanifold, k-neighbourly
    int k = -1;                     // dim K = 2k+1
    bool odd_dimension = false;
    bool pseudomanifold = false;
    bool neighbourly_enough = false;
    DesuspensionInner inner;
    std::string conclusion;
};

/* Hypotheses of the neighbourly desuspension statement: K a k-neighbourly
 * (2k+1)-dimensional pseudomanifold, k >= 1. When they hold, the stable
 * decomposition of the moment-angle complex over every K \ i desuspends. */
DesuspensionCheck desuspension_criterion(const SimplicialComplex& K, int cap = 20);

/* Golod decision per the implemented criteria:
 *   - ∂Δ^{n+1}: Golod;
 *   - k-neighbourly (2k+1)-dimensional pseudomanifold with sphere evidence,
 *     not the boundary of a simplex: MinimallyNonGolod;
 *   - other triangulated spheres: NotGolod (minimality undecided);
 *   - otherwise Unknown.
 * HomologyLevel sphere evidence downgrades the verdict to conditional. */
GolodStatus golod_status(const SimplicialComplex& K, int cap = 20);

struct TorsionTransfer {
    bool full_torsion_free = false;
    bool skeleton_torsion_free = false;
    bool consistent = false;  // must be equal by the retraction argument
};

/* Cross-check of the torsion transfer: for K satisfying the facet-filtration
 * hypotheses, torsion-freeness of the moment-angle homology agrees between K
 * and its codimension-one skeleton. */
TorsionTransfer torsion_transfer_check(const SimplicialComplex& K, int cap = 20);

}  // namespace polyprod
