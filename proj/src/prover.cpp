#include "polyprod/prover.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "polyprod/corpus.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/mac.hpp"
#include "polyprod/pseudo.hpp"

namespace polyprod {

namespace {

struct ProverCtx {
    int cap = 20;
    std::map<std::string, ProverResult> memo;
};

ProverResult prove(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx);


std::string memo_key(const SimplicialComplex& K, const PairClass& pairs) {
    return K.to_text() + "|" + pairs_to_json(pairs).dump();
}

/* Every rule consumes Sigma A_i in W. For the built-in pairs this is a
 * computation (Sigma S^1 = S^2, Sigma S^0 = S^1); for general pairs it is
 * the caller's attestation and grades the certificate Conditional. */
void add_class_hypothesis(Certificate& c, const PairClass& pairs) {
    if (pairs.kind() == PairKind::General) {
        c.attestations.push_back(
            {"sigma-atoms-in-w",
             "Sigma A_i is homotopy equivalent to a wedge of simply connected spheres "
             "for every atom of the pair class"});
        c.grading = Grading::Conditional;
        c.unverified.push_back("Sigma A_i in W for every atom (attested, not computed)");
    } else {
        c.notes.push_back(pairs.kind() == PairKind::MomentAngle
                              ? "Sigma S^1 = S^2 lies in W"
                              : "Sigma S^0 = S^1 lies in W");
    }
}

std::string goal_text(const SimplicialComplex& K, const PairClass& pairs) {
    return "loop space of " + to_display(poly_prod(K, pairs)) + " lies in P";
}

Json complex_arg(const SimplicialComplex& K) {
    return Json{{"complex", complex_to_json(K)}};
}

TorsionWitness witness_from(const SimplicialComplex& K, VertexSet I) {
    TorsionWitness w;
    w.subset = I;
    w.profile = reduced_homology(full_subcomplex(K, I).complex);
    for (int d : w.profile.degrees()) {
        if (!w.profile.torsion(d).empty()) {
            w.degree = d;
            w.torsion = w.profile.torsion(d);
            break;
        }
    }
    w.mac_degree = w.degree + I.size() + 1;
    return w;
}

std::string witness_text(const TorsionWitness& w) {
    std::ostringstream out;
    out << "H_" << w.degree << " of the full subcomplex on I = " << to_string(w.subset)
        << " has torsion Z/" << w.torsion.front();
    return out.str();
}

// ---- rule frames ----------------------------------------------------------

struct RuleOutcome {
    std::optional<Certificate> cert;
    RuleAttempt attempt;
    std::optional<TorsionWitness> witness;
};

RuleOutcome try_dim1(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "dim1-complex";
    if (K.is_void() || K.dim() > 1 || K.dim() < 0) {
        out.attempt.outcome = "K is not a complex of dimension <= 1 with vertices";
        return out;
    }
    out.attempt.applicable = true;
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "dim1-complex";
    c.statement =
        "K has dimension <= 1, and the loop space of the polyhedral product over any "
        "complex of dimension at most one is in P";
    c.facts.push_back(make_fact("dimension", complex_arg(K), ctx.cap));
    if (K.dim() == 0)
        c.notes.push_back("K has no edges; it is a 1-dimensional complex with empty edge set");
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_surface(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "orientable-surface";
    if (K.dim() != 2) {
        out.attempt.outcome = "K is not 2-dimensional";
        return out;
    }
    SurfaceClass sc = surface_classify(K);
    if (!sc.is_surface) {
        out.attempt.outcome = "not a closed surface triangulation: " + sc.reason;
        return out;
    }
    out.attempt.applicable = true;
    if (!sc.orientable) {
        out.attempt.outcome = "the surface is non-orientable";
        return out;
    }
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "orientable-surface";
    c.statement =
        "K triangulates a closed orientable surface of genus " + std::to_string(sc.genus) +
        ", and the loop space of the polyhedral product over any such triangulation is in P";
    c.facts.push_back(make_fact("surface-classify", complex_arg(K), ctx.cap));
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_dim2(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "dim2-torsion-free";
    if (K.dim() != 2) {
        out.attempt.outcome = "K is not 2-dimensional";
        return out;
    }
    out.attempt.applicable = true;
    SubcomplexTorsionScan scan = torsion_free_all_full_subcomplexes(K, true, ctx.cap);
    if (!scan.all_torsion_free) {
        out.witness = witness_from(K, *scan.witness);
        out.attempt.outcome = witness_text(*out.witness);
        return out;
    }
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "dim2-torsion-free";
    c.statement =
        "K is 2-dimensional and every full subcomplex with complete 1-skeleton has "
        "torsion-free homology, so the loop space of the polyhedral product is in P";
    c.facts.push_back(make_fact("dimension", complex_arg(K), ctx.cap));
    c.facts.push_back(make_fact(
        "torsion-free-full-subcomplexes",
        Json{{"complex", complex_to_json(K)}, {"only_complete_one_skeleton", true}}, ctx.cap));
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_low_dim_pm(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "low-dim-pseudomanifold";
    const int n = K.dim();
    if (n != 2 && n != 3) {
        out.attempt.outcome = "K is not 2- or 3-dimensional";
        return out;
    }
    PseudoClass pc = classify(K);
    if (!pc.pseudomanifold) {
        out.attempt.outcome = "K is not a closed pseudomanifold";
        return out;
    }
    out.attempt.applicable = true;
    if (neighbourliness(K).complete_one_skeleton) {
        out.attempt.outcome = "the 1-skeleton of K is complete";
        return out;
    }
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "low-dim-pseudomanifold";
    c.statement = "K is a " + std::to_string(n) +
                  "-dimensional pseudomanifold whose 1-skeleton is not complete";
    if (n == 3) {
        SubcomplexTorsionScan scan = torsion_free_all_full_subcomplexes(K, true, ctx.cap);
        if (!scan.all_torsion_free) {
            out.witness = witness_from(K, *scan.witness);
            out.attempt.outcome = witness_text(*out.witness);
            return out;
        }
        c.statement +=
            " and every full subcomplex with complete 1-skeleton has torsion-free homology";
        c.facts.push_back(make_fact(
            "torsion-free-full-subcomplexes",
            Json{{"complex", complex_to_json(K)}, {"only_complete_one_skeleton", true}},
            ctx.cap));
    }
    c.statement += ", so the loop space of the polyhedral product is in P";
    c.facts.push_back(make_fact("classify", complex_arg(K), ctx.cap));
    c.facts.push_back(make_fact("neighbourliness", complex_arg(K), ctx.cap));
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_pm_with_boundary(const SimplicialComplex& K, const PairClass& pairs,
                                 ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "pseudomanifold-with-boundary-low-dim";
    const int n = K.dim();
    PseudoClass pc = classify(K);
    if (n < 1 || n > 3 || !pc.pure || !pc.weak_pm_with_boundary || pc.boundary_faces.empty()) {
        out.attempt.outcome =
            "K is not a pure weak pseudomanifold of dimension <= 3 with nonempty boundary";
        return out;
    }
    out.attempt.applicable = true;
    try {
        facet_filtration(K);
    } catch (const HypothesisError& e) {
        out.attempt.outcome = e.what();
        return out;
    }
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "pseudomanifold-with-boundary-low-dim";
    c.statement = "K is a pure " + std::to_string(n) +
                  "-dimensional weak pseudomanifold with boundary admitting a facet "
                  "filtration";
    if (n == 3) {
        // the filtration lands in the 2-skeleton; its full subcomplexes with
        // complete 1-skeleton must be torsion-free
        SubcomplexTorsionScan scan =
            torsion_free_all_full_subcomplexes(skeleton(K, 2), true, ctx.cap);
        if (!scan.all_torsion_free) {
            out.witness = witness_from(skeleton(K, 2), *scan.witness);
            out.attempt.outcome = witness_text(*out.witness) + " (in the 2-skeleton)";
            return out;
        }
        c.statement +=
            ", and every full subcomplex of the 2-skeleton with complete 1-skeleton has "
            "torsion-free homology";
        c.facts.push_back(make_fact(
            "torsion-free-full-subcomplexes",
            Json{{"complex", complex_to_json(skeleton(K, 2))},
                 {"only_complete_one_skeleton", true}},
            ctx.cap));
    }
    c.statement +=
        "; the loop space of the polyhedral product over K retracts off the one over the "
        "codimension-one skeleton, which is in P by the low-dimensional criteria";
    c.facts.push_back(make_fact("classify", complex_arg(K), ctx.cap));
    c.facts.push_back(make_fact("facet-filtration", complex_arg(K), ctx.cap));
    c.notes.push_back("cited splittings: skeleton-splitting, retract-closure");
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_neighbourly_sphere(const SimplicialComplex& K, const PairClass& pairs,
                                   ProverCtx& ctx) {
    RuleOutcome out;
    const int n = K.dim();
    out.attempt.rule_id = n == 3 ? "sphere3-complete-skeleton" : "neighbourly-odd-sphere";
    if (pairs.kind() != PairKind::MomentAngle) {
        out.attempt.outcome = "stated for the moment-angle pair only";
        return out;
    }
    if (n < 3 || n % 2 == 0) {
        out.attempt.outcome = "dim K is not of the form 2k+1 with k >= 1";
        return out;
    }
    DesuspensionCheck dc = desuspension_criterion(K, ctx.cap);
    if (!dc.pseudomanifold) {
        out.attempt.outcome = "K is not a closed pseudomanifold";
        return out;
    }
    out.attempt.applicable = true;
    if (!dc.neighbourly_enough) {
        out.attempt.outcome = "K is not " + std::to_string(dc.k) + "-neighbourly";
        return out;
    }
    SphereEvidence ev = sphere_evidence(K, n);
    if (ev.grade == SphereGrade::Fails) {
        out.attempt.outcome = "no evidence that K triangulates S^" + std::to_string(n);
        return out;
    }
    if (!dc.inner.holds) {
        out.attempt.outcome =
            "a proper full subcomplex has homology not free and concentrated in one degree";
        return out;
    }
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = out.attempt.rule_id;
    c.statement = "K is a " + std::to_string(dc.k) + "-neighbourly triangulation of S^" +
                  std::to_string(n) +
                  "; the loop space of its moment-angle complex retracts onto a product of "
                  "loops on spheres, hence is in P";
    c.facts.push_back(make_fact("classify", complex_arg(K), ctx.cap));
    c.facts.push_back(make_fact("neighbourliness", complex_arg(K), ctx.cap));
    c.facts.push_back(
        make_fact("sphere-evidence", Json{{"complex", complex_to_json(K)}, {"n", n}}, ctx.cap));
    c.facts.push_back(make_fact("desuspension-inner", complex_arg(K), ctx.cap));
    if (ev.grade != SphereGrade::Verified) {
        c.grading = Grading::Conditional;
        c.unverified.push_back("the geometric realization of K is S^" + std::to_string(n) +
                               " (sphere evidence is homology-level)");
    }
    add_class_hypothesis(c, pairs);
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

RuleOutcome try_vertex_deletion(const SimplicialComplex& K, const PairClass& pairs,
                                ProverCtx& ctx) {
    RuleOutcome out;
    out.attempt.rule_id = "vertex-deletion-induction";
    if (K.dim() < 1) {
        out.attempt.outcome = "K has no edges to induct over";
        return out;
    }
    if (neighbourliness(K).complete_one_skeleton) {
        out.attempt.outcome =
            "the 1-skeleton of K is complete; no missing edge opens a pushout";
        return out;
    }
    out.attempt.applicable = true;
    Certificate c;
    c.goal = goal_text(K, pairs);
    c.rule_id = "vertex-deletion-induction";
    c.statement =
        "the 1-skeleton of K is incomplete, so the polyhedral product is a homotopy "
        "pushout over a missing edge; the loop space over every deletion K \\ i is in P, "
        "and pushout-splitting with retract-closure places the loop space over K in P";
    c.facts.push_back(make_fact("neighbourliness", complex_arg(K), ctx.cap));
    c.notes.push_back("cited splittings: pushout-splitting, retract-closure, "
                      "full-subcomplex-retract");
    for (int i = 1; i <= K.vertex_count(); ++i) {
        Subcomplex sub = delete_vertex(K, i);
        ProverResult r = prove(sub.complex, pairs.restricted(sub.vertex_map), ctx);
        if (!r.proved) {
            out.attempt.outcome = "after deleting vertex " + std::to_string(i) + ": " +
                                  r.failure->deepest;
            if (r.failure->witness) {
                // relabel the witness back into K's vertices
                TorsionWitness w = *r.failure->witness;
                std::vector<int> orig;
                for (int v : w.subset.vertices()) orig.push_back(sub.vertex_map[v - 1]);
                w.subset = VertexSet::of(orig);
                out.witness = std::move(w);
            }
            return out;
        }
        c.premises.push_back(*r.certificate);
    }
    // conditional premises make the induction conditional
    for (const Certificate& p : c.premises) {
        if (p.grading == Grading::Conditional) c.grading = Grading::Conditional;
        for (const std::string& u : p.unverified)
            if (std::find(c.unverified.begin(), c.unverified.end(), u) == c.unverified.end())
                c.unverified.push_back(u);
    }
    add_class_hypothesis(c, pairs);
    if (c.grading == Grading::Conditional && pairs.kind() != PairKind::General)
        c.notes.push_back("conditional through a premise");
    out.cert = std::move(c);
    out.attempt.outcome = "proved";
    return out;
}

ProverResult prove(const SimplicialComplex& K, const PairClass& pairs, ProverCtx& ctx) {
    const std::string key = memo_key(K, pairs);
    auto hit = ctx.memo.find(key);
    if (hit != ctx.memo.end()) return hit->second;

    using RuleFn = RuleOutcome (*)(const SimplicialComplex&, const PairClass&, ProverCtx&);
    static constexpr RuleFn rules[] = {
        try_dim1,       try_surface,           try_dim2,            try_low_dim_pm,
        try_pm_with_boundary, try_neighbourly_sphere, try_vertex_deletion,
    };

    ProverResult result;
    ProofFailure fail;
    for (RuleFn rule : rules) {
        RuleOutcome out = rule(K, pairs, ctx);
        fail.attempts.push_back(out.attempt);
        if (out.witness && !fail.witness) fail.witness = std::move(out.witness);
        if (out.cert) {
            result.proved = true;
            result.certificate = std::move(out.cert);
            ctx.memo.emplace(key, result);
            return result;
        }
    }

    // deepest failed hypothesis: a torsion witness beats a failed side
    // condition, which beats plain inapplicability
    if (fail.witness) {
        fail.deepest = witness_text(*fail.witness);
        fail.notes.push_back("the torsion class transfers to degree " +
                             std::to_string(fail.witness->mac_degree) +
                             " of the moment-angle homology over K; torsion there blocks "
                             "every implemented wedge route");
        if (K == corpus_generate("rp2_six"))
            fail.notes.push_back(
                "known obstruction: over the 6-vertex projective plane the loop homology "
                "of the moment-angle complex itself contains 2-torsion");
    } else {
        const RuleAttempt* best = nullptr;
        for (const RuleAttempt& a : fail.attempts)
            if (a.applicable) best = &a;
        fail.deepest = best ? best->rule_id + ": " + best->outcome
                            : "no implemented criterion applies to this complex";
    }
    result.failure = std::move(fail);
    ctx.memo.emplace(key, result);
    return result;
}

}  // namespace

ProverResult p_membership(const SimplicialComplex& K, const PairClass& pairs, int cap) {
    if (pairs.size() != K.vertex_count())
        throw std::invalid_argument("pair class has " + std::to_string(pairs.size()) +
                                    " atoms but the complex has " +
                                    std::to_string(K.vertex_count()) + " vertices");
    if (!pairs.all_sigma_in_w()) {
        ProverResult r;
        ProofFailure f;
        f.deepest =
            "missing attestation: the pair class does not declare Sigma A_i in W for "
            "every atom, and every implemented rule consumes that hypothesis";
        r.failure = std::move(f);
        return r;
    }
    ProverCtx ctx;
    ctx.cap = cap;
    return prove(K, pairs, ctx);
}

}  // namespace polyprod
