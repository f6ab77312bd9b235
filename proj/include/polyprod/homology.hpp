#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/snf.hpp"

namespace polyprod {

struct GradedGroup {
    long long rank = 0;
    std::vector<long long> torsion;  // divisibility chain t_1 | t_2 | ..., each >= 2

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
};

// Merge torsion coefficients into a canonical divisibility chain.
std::vector<long long> normalize_torsion(std::vector<long long> coeffs);

/* Graded abelian group, used for reduced homology. Sparse: only nonzero
 * degrees are stored. Degree -1 occurs for the empty complex {∅}. */
class HomologyProfile {
public:
    static HomologyProfile zero() { return {}; }
    static HomologyProfile sphere(int d);

    void set(int degree, GradedGroup g);
    void add_rank(int degree, long long r);
    void add_torsion(int degree, const std::vector<long long>& coeffs);

    long long rank(int degree) const;
    const std::vector<long long>& torsion(int degree) const;

    bool trivial() const { return groups_.empty(); }
    bool torsion_free() const;
    // degrees carrying a nonzero group; empty when trivial
    std::vector<int> degrees() const;
    int min_degree() const;  // requires !trivial()
    int max_degree() const;

    HomologyProfile shifted(int k) const;
    HomologyProfile& direct_sum(const HomologyProfile& o);

    const std::map<int, GradedGroup>& groups() const { return groups_; }

    // Poincaré series of the corresponding space (adds the degree-0 unit),
    // e.g. "1 + 2t^3 + t^6". Torsion is not shown.
    std::string poincare() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

private:
    std::map<int, GradedGroup> groups_;
};

// Reduced Künneth sum for a smash product. Throws
// HypothesisError(TorsionKuenneth) when both factors carry torsion.
HomologyProfile tensor_reduced(const HomologyProfile& a, const HomologyProfile& b);

// Reduced homology of a product: tensor ⊕ a ⊕ b.
HomologyProfile product_reduced(const HomologyProfile& a, const HomologyProfile& b);

/* Augmented simplicial chain complex over Z. bases[d+1] holds the d-faces
 * (so index 0 is the empty simplex); boundary[d] is ∂_d : C_d -> C_{d-1}
 * for 0 <= d <= dim. ∂∘∂ = 0 is verified on construction. */
struct ChainComplexZ {
    std::vector<std::vector<VertexSet>> bases;
    std::vector<IntMat> boundary;

    static ChainComplexZ of(const SimplicialComplex& K);
};

// Reduced integer homology via Smith normal form.
HomologyProfile reduced_homology(const SimplicialComplex& K);

struct SubcomplexTorsionScan {
    bool all_torsion_free = true;
    std::optional<VertexSet> witness;  // smallest (size, lex) subset with torsion
    long long subsets_checked = 0;
};

/* Scan every nonempty I ⊆ [m] (optionally only those inducing a complete
 * 1-skeleton) for torsion in H̃(K_I). Enumeration is exponential in m; a cap
 * guards it. */
SubcomplexTorsionScan torsion_free_all_full_subcomplexes(const SimplicialComplex& K,
                                                         bool only_complete_one_skeleton,
                                                         int cap = 20);

struct WedgeRecognition {
    bool recognized = false;
    std::map<int, long long> spheres;  // dimension -> count; empty means a point
    std::string reason;                // set when not recognized
};

/* Recognize a wedge of spheres from a homology profile. Sound only under the
 * caller's attestations: the space is simply connected and admits cells in
 * at most two consecutive dimensions. Returns not-recognized (with a reason)
 * if the attestations are missing, the profile has torsion, or the ranks are
 * not confined to two consecutive degrees >= 2. */
WedgeRecognition wedge_recognition(const HomologyProfile& p,
                                   bool cells_in_two_consecutive_dims,
                                   bool simply_connected_attested);

struct SurfaceClass {
    bool is_surface = false;   // closed connected 2-manifold triangulation
    bool orientable = false;
    int genus = -1;            // orientable case
    int cross_caps = -1;       // non-orientable case
    long long euler = 0;
    std::string reason;        // set when not a surface
};

// Closed-surface recognition: pure 2-dimensional, every edge in exactly two
// triangles, connected, every vertex link a single cycle; orientability by
// propagating facet orientations across shared edges.
SurfaceClass surface_classify(const SimplicialComplex& K);

}  // namespace polyprod
