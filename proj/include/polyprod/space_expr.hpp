#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/pairs.hpp"

namespace polyprod {

/* Symbolic homotopy types.
 *
 * Expressions are immutable trees; the combinators below build them without
 * simplifying, normalize() rewrites to a canonical form. Every rewrite is a
 * homotopy equivalence of well-pointed spaces, so normalization preserves
 * expr_homology exactly.
 */
enum class ExprKind {
    Point,
    Sphere,      // n = dimension >= 0
    Atom,        // named space, optional homology profile, suspension flag
    Wedge,
    Product,
    Smash,
    HalfSmash,   // children[0] ⋊ children[1] = (A × B)/(* × B)
    Suspension,  // n = iteration count >= 1
    Loop,        // terminal: nothing rewrites under a loop
    PolyProd,    // polyhedral product of `pairs` over `complex`
};

const char* expr_kind_name(ExprKind k);

struct SpaceExpr;
using ExprPtr = std::shared_ptr<const SpaceExpr>;

struct SpaceExpr {
    ExprKind kind = ExprKind::Point;
    int n = 0;                                 // Sphere dim / Suspension count
    std::string name;                          // Atom
    std::optional<HomologyProfile> profile;    // Atom
    bool atom_suspension = false;              // Atom: attested suspension
    std::vector<ExprPtr> children;
    std::optional<SimplicialComplex> complex;  // PolyProd
    std::optional<PairClass> pairs;            // PolyProd
};

ExprPtr point();
ExprPtr sphere(int d);
ExprPtr atom(std::string name, std::optional<HomologyProfile> profile,
             bool is_suspension = false);
ExprPtr atom_from_pair(const PairAtom& a);
ExprPtr wedge(std::vector<ExprPtr> parts);
ExprPtr product(std::vector<ExprPtr> parts);
ExprPtr smash(std::vector<ExprPtr> parts);
ExprPtr half_smash(ExprPtr left, ExprPtr right);
ExprPtr suspension(int count, ExprPtr body);
ExprPtr loop(ExprPtr body);
ExprPtr poly_prod(SimplicialComplex K, PairClass pairs);

// total order used for the canonical ordering of wedge/product/smash parts
int expr_cmp(const ExprPtr& a, const ExprPtr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/* The expression is a suspension by construction: spheres of dimension >= 1,
 * explicit suspensions, attested atoms, wedges of suspensions, smashes with a
 * suspension factor, and polyhedral products over simplex boundaries. */
bool is_suspension(const ExprPtr& e);

/* Rewrites, applied until fixpoint:
 *   - wedge/product/smash flattening, unit elimination, canonical ordering
 *   - smash of spheres -> sphere of the dimension sum
 *   - suspensions pulled out of smashes; Susp^k S^a -> S^{a+k}
 *   - smash distributes over wedge
 *   - A ⋊ B -> A ∨ (A ∧ B) when A is a suspension
 *   - Susp(X × Y) -> Susp(X ∨ Y ∨ (X ∧ Y)), iterated over the factors; the
 *     same splitting fires for a product inside a smash that has a
 *     suspension factor or sits under an ambient suspension
 *   - polyhedral products: ghost vertices split off as factors, the full
 *     simplex collapses to a point, the empty complex becomes the product of
 *     the atoms, and a simplex boundary becomes Susp^{m-1}(A_1 ∧ … ∧ A_m)
 * Nothing rewrites under Loop. Irreducible subterms stay symbolic. */
ExprPtr normalize(const ExprPtr& e);

/* Exact reduced homology of a closed expression. Throws HypothesisError:
 * LoopNotComputable under a Loop, ProfileUnknown for an atom without a
 * profile, PolyProdNotComputable for general pairs, TorsionKuenneth when a
 * product or smash has torsion in two factors. `cap` bounds the Hochster
 * enumeration behind PolyProd nodes. */
HomologyProfile expr_homology(const ExprPtr& e, int cap = 20);

/* Prefix grammar, one token per node:
 *   * | S^d | (atom NAME) | (v e…) | (x e…) | (sm e…) | (hs e e)
 *     | (susp k e) | (loop e) | (zk KIND "m;facets")
 * This is the machine rendering; to_display is the infix human one. */
std::string to_prefix(const ExprPtr& e);
std::string to_display(const ExprPtr& e);

}  // namespace polyprod
