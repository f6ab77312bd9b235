#include "polyprod/decomp.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyprod/errors.hpp"
#include "polyprod/mac.hpp"
#include "polyprod/pseudo.hpp"

namespace polyprod {

namespace {

SimplicialComplex boundary_of_simplex_on(int s) {
    std::vector<VertexSet> fs;
    fs.reserve(s);
    VertexSet full = VertexSet::full(s);
    for (int i = 1; i <= s; ++i) fs.push_back(full.without(i));
    return SimplicialComplex::from_facet_sets(s, std::move(fs));
}

/* The summand produced by removing σ: (CA,A)^{∂σ} ⋊ ∏_{i∉σ} A_i. It depends
 * only on σ and the ambient pair class, not on the complex σ was removed
 * from. The boundary complex is taken on σ's own vertices so the ghost-split
 * rewrite cannot see the outside coordinates. */
ExprPtr removal_term(VertexSet sigma, int m, const PairClass& pairs) {
    SimplicialComplex bsig = boundary_of_simplex_on(sigma.size());
    ExprPtr fat = poly_prod(bsig, pairs.restricted(sigma.vertices()));
    std::vector<ExprPtr> outside;
    for (int i = 1; i <= m; ++i)
        if (!sigma.contains(i)) outside.push_back(atom_from_pair(pairs.atom(i)));
    if (outside.empty()) return fat;
    return half_smash(fat, product(std::move(outside)));
}

void require_pairs_match(const SimplicialComplex& K, const PairClass& pairs) {
    if (pairs.size() != K.vertex_count())
        throw std::invalid_argument("pair class has " + std::to_string(pairs.size()) +
                                    " atoms but the complex has " +
                                    std::to_string(K.vertex_count()) + " vertices");
}


}  // namespace

Decomposition facet_removal_decomposition(const SimplicialComplex& K, VertexSet sigma,
                                          const PairClass& pairs, int cap) {
    require_pairs_match(K, pairs);
    std::optional<RemovalPair> rp = find_removal_pair(K, sigma);
    if (!rp)
        throw HypothesisError(Hypothesis::NoRemovalPair,
                              "every ridge of " + to_string(sigma) +
                                  " lies in a second facet; nothing splits off");
    if (sigma.dim() < 2)
        throw HypothesisError(Hypothesis::DimensionTooLow,
                              "dim sigma = " + std::to_string(sigma.dim()) +
                                  "; the splitting needs dim sigma >= 2 so that removing "
                                  "sigma keeps every vertex covered");

    ExprPtr piece = removal_term(sigma, K.vertex_count(), pairs);
    ExprPtr tail = poly_prod(K, pairs);
    ExprPtr expr = normalize(wedge({piece, tail}));

    SimplicialComplex removed = remove_face(K, sigma);

    Certificate cert;
    cert.goal = "homotopy decomposition of " + to_display(poly_prod(removed, pairs));
    cert.rule_id = "facet-removal-splitting";
    cert.statement =
        "sigma = " + to_string(sigma) + " is a maximal face whose ridge tau = " +
        to_string(rp->tau) +
        " lies in no other facet, so the polyhedral product over K \\ sigma splits as "
        "(the product over bd(sigma), half-smashed with the outside atoms) wedge the "
        "product over K";
    cert.grading = Grading::Proved;
    cert.facts.push_back(make_fact(
        "removal-pair",
        Json{{"complex", complex_to_json(K)}, {"sigma", Json(sigma.vertices())}}, cap));
    cert.notes.push_back("dim sigma = " + std::to_string(sigma.dim()));
    cert.notes.push_back("decomposed form: " + to_display(expr));
    return Decomposition{expr, std::move(cert)};
}

Decomposition skeleton_decomposition(const SimplicialComplex& K, const PairClass& pairs,
                                     int cap) {
    require_pairs_match(K, pairs);
    FacetFiltration filt = facet_filtration(K);
    const int m = K.vertex_count();

    std::vector<ExprPtr> parts;
    parts.reserve(filt.steps.size() + 1);
    for (const FiltrationStep& st : filt.steps) parts.push_back(removal_term(st.sigma, m, pairs));
    parts.push_back(poly_prod(K, pairs));
    ExprPtr expr = normalize(wedge(std::move(parts)));

    Certificate cert;
    cert.goal =
        "homotopy decomposition of " + to_display(poly_prod(filt.skeleton_result, pairs));
    cert.rule_id = "skeleton-splitting";
    cert.statement =
        "K is a pure weak pseudomanifold with boundary whose dual-graph components each "
        "contain a facet of low degree, so removing facets along the filtration applies "
        "facet-removal-splitting once per facet: the product over the codimension-one "
        "skeleton is the wedge of the per-facet terms with the product over K";
    cert.grading = Grading::Proved;
    cert.facts.push_back(make_fact("classify", Json{{"complex", complex_to_json(K)}}, cap));
    cert.facts.push_back(
        make_fact("facet-filtration", Json{{"complex", complex_to_json(K)}}, cap));
    // one removal-pair fact per step, each checked in the complex it was
    // removed from (K, then the successive remainders)
    const SimplicialComplex* stage = &K;
    for (const FiltrationStep& st : filt.steps) {
        cert.facts.push_back(make_fact(
            "removal-pair",
            Json{{"complex", complex_to_json(*stage)}, {"sigma", Json(st.sigma.vertices())}},
            cap));
        cert.notes.push_back("remove sigma = " + to_string(st.sigma) +
                             " along tau = " + to_string(st.tau));
        stage = &st.after;
    }
    if (filt.low_dim)
        cert.notes.push_back(
            "dim sigma = 1 steps: removal can strand a vertex; the stranded vertex stays "
            "in the complex as a ghost and its atom appears as an explicit factor");
    cert.notes.push_back("decomposed form: " + to_display(expr));
    return Decomposition{expr, std::move(cert)};
}

Decomposition skeleton_wedge_of_zk(const SimplicialComplex& K, int cap) {
    DesuspensionCheck dc = desuspension_criterion(K, cap);
    if (!dc.odd_dimension)
        throw HypothesisError(Hypothesis::DimensionTooLow,
                              "dim K = " + std::to_string(K.dim()) +
                                  " is not of the form 2k+1 with k >= 1");
    if (!dc.pseudomanifold)
        throw HypothesisError(Hypothesis::NotPseudomanifold,
                              "K is not a closed pseudomanifold");
    if (!dc.neighbourly_enough)
        throw HypothesisError(Hypothesis::NeighbourlinessTooLow,
                              "K is not " + std::to_string(dc.k) + "-neighbourly");
    if (!dc.inner.holds) {
        std::string where = dc.inner.violating_subset
                                ? " at I = " + to_string(*dc.inner.violating_subset)
                                : "";
        throw HypothesisError(Hypothesis::WedgeNotRecognized,
                              "a proper full subcomplex has homology not free and "
                              "concentrated in one degree" + where);
    }
    const int n = K.dim();
    SphereEvidence ev = sphere_evidence(K, n);
    if (ev.grade == SphereGrade::Fails)
        throw HypothesisError(Hypothesis::SphereEvidenceFails,
                              "K does not present as a triangulated S^" + std::to_string(n));

    Certificate cert;
    cert.rule_id = "odd-sphere-wedge-refinement";
    cert.grading = ev.grade == SphereGrade::Verified ? Grading::Proved : Grading::Conditional;
    if (cert.grading == Grading::Conditional)
        cert.unverified.push_back("the geometric realization of K is S^" + std::to_string(n) +
                                  " (sphere evidence is homology-level)");
    cert.facts.push_back(
        make_fact("neighbourliness", Json{{"complex", complex_to_json(K)}}, cap));
    cert.facts.push_back(make_fact(
        "sphere-evidence", Json{{"complex", complex_to_json(K)}, {"n", n}}, cap));
    cert.facts.push_back(
        make_fact("desuspension-inner", Json{{"complex", complex_to_json(K)}}, cap));

    if (is_boundary_of_simplex(K)) {
        ExprPtr expr = point();
        cert.goal = "wedge form of the codimension-one skeleton of the moment-angle complex";
        cert.statement =
            "K is the boundary of a simplex: every proper subset of the vertex set is a "
            "face, the skeleton sum has no summands and the skeleton is contractible";
        cert.facts.push_back(
            make_fact("is-boundary-of-simplex", Json{{"complex", complex_to_json(K)}}, cap));
        cert.notes.push_back("decomposed form: *");
        return Decomposition{expr, std::move(cert)};
    }

    MacHomology smac = skeleton_mac_homology(K, cap);
    std::vector<ExprPtr> spheres;
    for (const SubsetContribution& c : smac.contributions) {
        if (!c.profile.torsion_free())
            throw HypothesisError(Hypothesis::WedgeNotRecognized,
                                  "torsion at I = " + to_string(c.I));
        for (int d : c.profile.degrees())
            for (long long r = 0; r < c.profile.rank(d); ++r) spheres.push_back(sphere(d));
    }
    ExprPtr expr = normalize(wedge(std::move(spheres)));
    if (!(expr_homology(expr, cap) == smac.total))
        throw std::logic_error("skeleton wedge does not reproduce the skeleton homology");

    cert.goal = "wedge form of the codimension-one skeleton of the moment-angle complex";
    cert.statement =
        "K is a " + std::to_string(dc.k) + "-neighbourly (2k+1)-dimensional triangulated "
        "sphere, so the stable subset decomposition of the skeleton desuspends: the "
        "skeleton is the wedge of one sphere per homology generator of the proper "
        "subset summands";
    cert.facts.push_back(
        make_fact("skeleton-mac-homology", Json{{"complex", complex_to_json(K)}}, cap));
    cert.facts.push_back(make_fact("expr-homology", Json{{"expr", expr_to_json(expr)}}, cap));
    cert.notes.push_back("summands: one S^j per generator, " +
                         std::to_string(smac.contributions.size()) +
                         " contributing subsets");
    cert.notes.push_back("decomposed form: " + to_display(expr));
    return Decomposition{expr, std::move(cert)};
}

}  // namespace polyprod
