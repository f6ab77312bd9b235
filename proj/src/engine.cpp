#include "polyprod/engine.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polyprod/corpus.hpp"
#include "polyprod/decomp.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/hilton_milnor.hpp"
#include "polyprod/mac.hpp"
#include "polyprod/prover.hpp"
#include "polyprod/pseudo.hpp"
#include "polyprod/space_expr.hpp"

namespace polyprod {

const char* const kEngineVersion = "0.1.0";

namespace {

// ---- input ------------------------------------------------------------

std::string strip_comment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

ParsedDocument document_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");
    ParsedDocument doc{SimplicialComplex::empty_complex(0), PairClass::moment_angle(0), {}};
    doc.complex = complex_from_json(j);
    doc.pairs = j.contains("pairs") ? pairs_from_json(j.at("pairs"))
                                    : PairClass::moment_angle(doc.complex.vertex_count());
    if (doc.pairs.size() != doc.complex.vertex_count())
        throw std::invalid_argument("pair class has " + std::to_string(doc.pairs.size()) +
                                    " atoms but the complex has " +
                                    std::to_string(doc.complex.vertex_count()) + " vertices");
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    return doc;
}

// ---- human-text helpers -------------------------------------------------

std::string group_text(const GradedGroup& g) {
    std::ostringstream out;
    bool first = true;
    if (g.rank > 0) {
        out << "Z";
        if (g.rank > 1) out << "^" << g.rank;
        first = false;
    }
    for (long long t : g.torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

void append_profile(std::ostringstream& out, const HomologyProfile& p,
                    const std::string& indent) {
    if (p.trivial()) {
        out << indent << "trivial\n";
        return;
    }
    for (int d : p.degrees())
        out << indent << "~H_" << d << " = " << group_text(p.groups().at(d)) << "\n";
}

std::string complex_line(const SimplicialComplex& K) {
    std::ostringstream out;
    out << "m=" << K.vertex_count() << "  dim=" << K.dim() << "  facets=" << K.facets().size();
    return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string f_vector_text(const SimplicialComplex& K) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (long long f : K.f_vector()) {
        if (!first) out << ", ";
        out << f;
        first = false;
    }
    out << ")";
    return out.str();
}

// ---- shared machine-report pieces ---------------------------------------

Json sphere_evidence_json(const SphereEvidence& ev) {
    return Json{{"boundary_of_simplex", ev.boundary_of_simplex},
                {"closed_pseudomanifold", ev.closed_pseudomanifold},
                {"grade", sphere_grade_name(ev.grade)},
                {"homology_matches", ev.homology_matches},
                {"links_verified", ev.links_verified},
                {"n", ev.n},
                {"notes", Json(ev.notes)}};
}

Json witness_json(const TorsionWitness& w) {
    return Json{{"degree", w.degree},
                {"mac_degree", w.mac_degree},
                {"profile", profile_to_json(w.profile)},
                {"subset", Json(w.subset.vertices())},
                {"torsion", Json(w.torsion)}};
}

Json expr_block(const ExprPtr& e) {
    return Json{{"display", to_display(e)}, {"prefix", to_prefix(e)}, {"tree", expr_to_json(e)}};
}

void append_certificate(std::ostringstream& out, const Certificate& c,
                        const std::string& indent) {
    out << indent << "rule: " << c.rule_id << "  grading: " << grading_name(c.grading) << "\n";
    out << indent << "statement: " << c.statement << "\n";
    for (const std::string& u : c.unverified) out << indent << "unverified: " << u << "\n";
    for (const Attestation& a : c.attestations)
        out << indent << "attested: " << a.name << ": " << a.statement << "\n";
    out << indent << "facts checked: " << c.facts.size()
        << "  premises: " << c.premises.size() << "\n";
    for (const std::string& nte : c.notes) out << indent << "note: " << nte << "\n";
}

// ---- per-command reports --------------------------------------------------

Report report_classify(const ParsedDocument& doc, const EngineOptions&) {
    const SimplicialComplex& K = doc.complex;
    PseudoClass pc = classify(K);
    Neighbourliness nb = neighbourliness(K);

    Json boundary = Json::array();
    for (const VertexSet& f : pc.boundary_faces) boundary.push_back(Json(f.vertices()));

    Report rep;
    rep.machine = Json{
        {"boundary_faces", boundary},
        {"closed", pc.closed},
        {"dim", K.dim()},
        {"dual_connected", pc.dual_connected},
        {"euler_characteristic", K.euler_characteristic()},
        {"f_vector", Json(K.f_vector())},
        {"ghost_vertices", Json(K.ghost_vertices().vertices())},
        {"neighbourliness",
         Json{{"complete_one_skeleton", nb.complete_one_skeleton},
              {"ghost_vertices", nb.ghost_vertices},
              {"k", nb.k}}},
        {"pseudomanifold", pc.pseudomanifold},
        {"pseudomanifold_with_boundary", pc.pseudomanifold_with_boundary},
        {"pure", pc.pure},
        {"weak_pseudomanifold_with_boundary", pc.weak_pm_with_boundary},
    };

    std::ostringstream out;
    out << "complex: " << complex_line(K) << "\n";
    out << "f-vector: " << f_vector_text(K) << "  euler: " << K.euler_characteristic() << "\n";
    out << "pure: " << yes_no(pc.pure) << "\n";
    out << "weak pseudomanifold (boundary allowed): " << yes_no(pc.weak_pm_with_boundary)
        << "\n";
    out << "boundary faces: " << pc.boundary_faces.size() << "\n";
    out << "closed: " << yes_no(pc.closed)
        << "  dual graph connected: " << yes_no(pc.dual_connected) << "\n";
    out << "pseudomanifold: " << yes_no(pc.pseudomanifold) << "\n";
    out << "pseudomanifold with boundary: " << yes_no(pc.pseudomanifold_with_boundary) << "\n";
    out << "neighbourliness: k=" << nb.k
        << "  complete 1-skeleton: " << yes_no(nb.complete_one_skeleton) << "\n";
    if (!K.ghost_vertices().vertices().empty())
        out << "ghost vertices: " << to_string(K.ghost_vertices()) << "\n";
    if (K.dim() == 2) {
        SurfaceClass sc = surface_classify(K);
        if (sc.is_surface) {
            out << "surface: " << (sc.orientable ? "orientable, genus " + std::to_string(sc.genus)
                                                 : "non-orientable, " +
                                                       std::to_string(sc.cross_caps) +
                                                       " cross-caps")
                << "\n";
            rep.machine["surface"] =
                Json{{"cross_caps", sc.cross_caps}, {"genus", sc.genus},
                     {"is_surface", true},          {"orientable", sc.orientable}};
        }
    }
    rep.human = out.str();
    return rep;
}

Report report_homology(const ParsedDocument& doc, const EngineOptions&) {
    HomologyProfile p = reduced_homology(doc.complex);
    Report rep;
    rep.machine = Json{{"poincare", p.poincare()}, {"reduced_homology", profile_to_json(p)}};
    std::ostringstream out;
    out << "complex: " << complex_line(doc.complex) << "\n";
    out << "reduced homology:\n";
    append_profile(out, p, "  ");
    out << "poincare: " << p.poincare() << "\n";
    rep.human = out.str();
    return rep;
}

Report report_mac(const std::string& command, const ParsedDocument& doc,
                  const EngineOptions& opts) {
    const SimplicialComplex& K = doc.complex;
    MacHomology mh = command == "mac"            ? mac_homology(K, opts.cap)
                     : command == "rz"           ? rz_homology(K, opts.cap)
                                                 : skeleton_mac_homology(K, opts.cap);
    Json contrib = Json::array();
    for (const SubsetContribution& c : mh.contributions)
        contrib.push_back(Json{{"I", Json(c.I.vertices())},
                               {"profile", profile_to_json(c.profile)},
                               {"shift", c.shift}});
    Report rep;
    rep.machine = Json{{"contributions", contrib},
                       {"poincare", mh.total.poincare()},
                       {"subsets_enumerated", mh.subsets_enumerated},
                       {"total", profile_to_json(mh.total)},
                       {"variant", mac_variant_name(mh.variant)}};
    std::ostringstream out;
    out << "complex: " << complex_line(K) << "\n";
    out << mac_variant_name(mh.variant) << " homology (reduced):\n";
    append_profile(out, mh.total, "  ");
    out << "poincare: " << mh.total.poincare() << "\n";
    out << "contributing subsets: " << mh.contributions.size() << " of "
        << mh.subsets_enumerated << " enumerated\n";
    for (const SubsetContribution& c : mh.contributions) {
        out << "  I=" << to_string(c.I) << "  shift=" << c.shift << "  ";
        bool first = true;
        for (int d : c.profile.degrees()) {
            if (!first) out << ", ";
            out << "~H_" << d << "=" << group_text(c.profile.groups().at(d));
            first = false;
        }
        out << "\n";
    }
    rep.human = out.str();
    return rep;
}

Report report_golod(const ParsedDocument& doc, const EngineOptions& opts) {
    GolodStatus gs = golod_status(doc.complex, opts.cap);
    Report rep;
    rep.machine = Json{{"conditional", gs.conditional},
                       {"evidence", sphere_evidence_json(gs.evidence)},
                       {"justification", gs.justification},
                       {"notes", Json(gs.notes)},
                       {"rule", gs.rule_id},
                       {"verdict", golod_verdict_name(gs.verdict)}};
    rep.exit_code = gs.verdict == GolodVerdict::Unknown ? 2 : 0;
    std::ostringstream out;
    out << "complex: " << complex_line(doc.complex) << "\n";
    out << "verdict: " << golod_verdict_name(gs.verdict);
    if (gs.conditional) out << "  (conditional on homology-level sphere evidence)";
    out << "\n";
    if (!gs.rule_id.empty()) out << "rule: " << gs.rule_id << "\n";
    out << "justification: " << gs.justification << "\n";
    for (const std::string& n : gs.notes) out << "note: " << n << "\n";
    rep.human = out.str();
    return rep;
}

Report report_decompose(const ParsedDocument& doc, const EngineOptions& opts) {
    if (!opts.facet || opts.facet->empty())
        throw std::invalid_argument("decompose needs --facet with the facet's vertices");
    VertexSet sigma = VertexSet::of(*opts.facet);
    Decomposition d = facet_removal_decomposition(doc.complex, sigma, doc.pairs, opts.cap);

    Report rep;
    rep.machine = Json{{"certificate", certificate_to_json(d.certificate)},
                       {"expr", expr_block(d.expr)},
                       {"removed_facet", Json(sigma.vertices())}};
    std::ostringstream out;
    out << "complex: " << complex_line(doc.complex) << "\n";
    out << "removing facet " << to_string(sigma) << ":\n";
    out << "  " << to_display(d.expr) << "\n";
    append_certificate(out, d.certificate, "  ");

    if (doc.pairs.kind() != PairKind::General) {
        SimplicialComplex removed = remove_face(doc.complex, sigma);
        HomologyProfile lhs = expr_homology(d.expr, opts.cap);
        HomologyProfile rhs = doc.pairs.kind() == PairKind::MomentAngle
                                  ? mac_homology(removed, opts.cap).total
                                  : rz_homology(removed, opts.cap).total;
        bool ok = lhs == rhs;
        rep.machine["cross_check"] = Json{{"consistent", ok},
                                          {"expr_homology", profile_to_json(lhs)},
                                          {"subset_sum", profile_to_json(rhs)}};
        out << "cross-check against the subset sum over K minus the facet: "
            << (ok ? "consistent" : "INCONSISTENT") << "\n";
    }
    rep.human = out.str();
    return rep;
}

Report report_skeleton_decompose(const ParsedDocument& doc, const EngineOptions& opts) {
    Decomposition d = skeleton_decomposition(doc.complex, doc.pairs, opts.cap);
    Report rep;
    rep.machine = Json{{"certificate", certificate_to_json(d.certificate)},
                       {"expr", expr_block(d.expr)}};
    std::ostringstream out;
    out << "complex: " << complex_line(doc.complex) << "\n";
    out << "codimension-one skeleton decomposition:\n";
    out << "  " << to_display(d.expr) << "\n";
    append_certificate(out, d.certificate, "  ");

    if (doc.pairs.kind() != PairKind::General) {
        SimplicialComplex skel = skeleton(doc.complex, doc.complex.dim() - 1);
        HomologyProfile lhs = expr_homology(d.expr, opts.cap);
        HomologyProfile rhs = doc.pairs.kind() == PairKind::MomentAngle
                                  ? mac_homology(skel, opts.cap).total
                                  : rz_homology(skel, opts.cap).total;
        bool ok = lhs == rhs;
        rep.machine["cross_check"] = Json{{"consistent", ok},
                                          {"expr_homology", profile_to_json(lhs)},
                                          {"subset_sum", profile_to_json(rhs)}};
        out << "cross-check against the subset sum over the skeleton: "
            << (ok ? "consistent" : "INCONSISTENT") << "\n";
    }
    rep.human = out.str();
    return rep;
}

struct SkeletonWedge {
    ExprPtr expr;
    Certificate certificate;
    std::vector<int> sphere_dims;  // with multiplicity
    bool skeleton_contractible = false;
};

/* Identify the codimension-one skeleton of the moment-angle complex as a
 * wedge of spheres: the desuspension route when the neighbourly hypotheses
 * hold, otherwise homology-level recognition under explicit attestations. */
SkeletonWedge skeleton_as_wedge(const SimplicialComplex& K, int cap) {
    SkeletonWedge sw;
    if (is_boundary_of_simplex(K)) {
        const int m = K.vertex_count();
        sw.expr = sphere(2 * m - 1);  // Z_K itself; the skeleton is contractible
        sw.skeleton_contractible = true;
        sw.sphere_dims.push_back(2 * m - 1);
        Certificate c;
        c.goal = "sphere form of the moment-angle complex over a simplex boundary";
        c.rule_id = "odd-sphere-wedge-refinement";
        c.statement = "K is the boundary of a simplex on " + std::to_string(m) +
                      " vertices, so the moment-angle complex is S^" +
                      std::to_string(2 * m - 1) + " and its skeleton is contractible";
        c.facts.push_back(make_fact("is-boundary-of-simplex",
                                    Json{{"complex", complex_to_json(K)}}, cap));
        sw.certificate = std::move(c);
        return sw;
    }
    try {
        Decomposition d = skeleton_wedge_of_zk(K, cap);
        sw.expr = d.expr;
        sw.certificate = std::move(d.certificate);
    } catch (const HypothesisError&) {
        // homology-level fallback: recognize the skeleton sum as a wedge
        MacHomology smac = skeleton_mac_homology(K, cap);
        bool two_dims = false;
        if (!smac.total.trivial())
            two_dims = smac.total.max_degree() - smac.total.min_degree() <= 1;
        WedgeRecognition wr = wedge_recognition(smac.total, two_dims, true);
        if (!wr.recognized) {
            std::string why = wr.reason;
            if (!two_dims && !smac.total.trivial())
                why = "homology spans degrees " + std::to_string(smac.total.min_degree()) +
                      ".." + std::to_string(smac.total.max_degree()) +
                      ", not two consecutive dimensions";
            throw HypothesisError(Hypothesis::WedgeNotRecognized,
                                  "the skeleton homology is not the profile of a "
                                  "recognizable wedge: " + why);
        }
        std::vector<ExprPtr> parts;
        for (auto [d, count] : wr.spheres)
            for (long long i = 0; i < count; ++i) parts.push_back(sphere(d));
        sw.expr = normalize(wedge(std::move(parts)));
        Certificate c;
        c.goal = "wedge form of the codimension-one skeleton of the moment-angle complex";
        c.rule_id = "two-cell-wedge-recognition";
        c.grading = Grading::Conditional;
        c.statement =
            "the skeleton homology is free and confined to two consecutive degrees; a "
            "simply connected complex with cells in two consecutive dimensions and this "
            "homology is the displayed wedge of spheres";
        c.attestations.push_back(
            {"cells-two-consecutive-dims",
             "the skeleton admits a CW structure with cells in at most two consecutive "
             "dimensions"});
        c.unverified.push_back(
            "the skeleton admits a CW structure with cells in at most two consecutive "
            "dimensions (attested, not computed)");
        c.notes.push_back(
            "simple connectivity is verified: the subset sum starts in degree 3");
        c.facts.push_back(make_fact("skeleton-mac-homology",
                                    Json{{"complex", complex_to_json(K)}}, cap));
        c.facts.push_back(
            make_fact("expr-homology", Json{{"expr", expr_to_json(sw.expr)}}, cap));
        sw.certificate = std::move(c);
    }
    const SpaceExpr& e = *sw.expr;
    if (e.kind == ExprKind::Sphere) {
        sw.sphere_dims.push_back(e.n);
    } else if (e.kind == ExprKind::Wedge) {
        for (const ExprPtr& ch : e.children) {
            if (ch->kind != ExprKind::Sphere)
                throw std::logic_error("skeleton wedge has a non-sphere summand");
            sw.sphere_dims.push_back(ch->n);
        }
    } else if (e.kind != ExprKind::Point) {
        throw std::logic_error("skeleton wedge has an unexpected shape");
    }
    return sw;
}

Json hilton_milnor_json(const HiltonMilnor& hm) {
    Json factors = Json::array();
    for (const LoopFactor& f : hm.factors)
        factors.push_back(Json{{"multiplicity", f.multiplicity},
                               {"sphere_dim", f.sphere_dim},
                               {"weight", f.weight}});
    return Json{{"cutoff", hm.cutoff},
                {"factors", factors},
                {"generators", Json(hm.generators)},
                {"tail_note", hm.tail_note},
                {"truncated", hm.truncated}};
}

void append_hilton_milnor(std::ostringstream& out, const HiltonMilnor& hm) {
    out << "factors up to dimension " << hm.cutoff << ":\n";
    for (const LoopFactor& f : hm.factors) {
        out << "  Omega S^" << f.sphere_dim;
        if (f.multiplicity > 1) out << "  x" << f.multiplicity;
        out << "  (bracket weight " << f.weight << ")\n";
    }
    if (hm.truncated) out << "tail: " << hm.tail_note << "\n";
}

Report report_loops(const ParsedDocument& doc, const EngineOptions& opts) {
    const SimplicialComplex& K = doc.complex;
    if (doc.pairs.kind() != PairKind::MomentAngle)
        throw std::invalid_argument("loops reads the moment-angle pair class only");
    if (!K.ghost_vertices().vertices().empty())
        throw HypothesisError(Hypothesis::SphereEvidenceFails,
                              "ghost vertices present: K cannot triangulate a closed "
                              "manifold on its vertex set");
    const int n = K.dim();
    SphereEvidence ev = sphere_evidence(K, n);
    if (ev.grade == SphereGrade::Fails)
        throw HypothesisError(Hypothesis::SphereEvidenceFails,
                              "no evidence that K triangulates S^" + std::to_string(n) +
                                  "; the skeleton retraction is not available");

    SkeletonWedge sw = skeleton_as_wedge(K, opts.cap);
    int top = 0;
    for (int d : sw.sphere_dims) top = std::max(top, d);
    const int cutoff = opts.cutoff.value_or(top + 4);
    HiltonMilnor hm = hilton_milnor(sw.sphere_dims, cutoff);

    std::string statement =
        sw.skeleton_contractible
            ? "the moment-angle complex is the sphere S^" + std::to_string(top) +
                  "; its loop space is Omega S^" + std::to_string(top)
            : "the loop space of the moment-angle complex retracts off the weak product "
              "of the Hilton-Milnor factors of the skeleton wedge";

    Report rep;
    rep.machine = Json{{"certificate", certificate_to_json(sw.certificate)},
                       {"hilton_milnor", hilton_milnor_json(hm)},
                       {"skeleton_contractible", sw.skeleton_contractible},
                       {"skeleton_wedge", expr_block(sw.expr)},
                       {"sphere_evidence", sphere_evidence_json(ev)},
                       {"statement", statement}};
    std::ostringstream out;
    out << "complex: " << complex_line(K) << "\n";
    out << (sw.skeleton_contractible ? "moment-angle complex: " : "skeleton wedge: ")
        << to_display(sw.expr) << "\n";
    out << statement << "\n";
    append_hilton_milnor(out, hm);
    append_certificate(out, sw.certificate, "  ");
    rep.human = out.str();
    return rep;
}

Report report_prove_p(const ParsedDocument& doc, const EngineOptions& opts) {
    ProverResult r = p_membership(doc.complex, doc.pairs, opts.cap);
    Report rep;
    std::ostringstream out;
    out << "complex: " << complex_line(doc.complex) << "\n";
    if (r.proved) {
        rep.machine = Json{{"certificate", certificate_to_json(*r.certificate)},
                           {"proved", true}};
        out << "PROVED: " << r.certificate->goal << "\n";
        append_certificate(out, r.certificate.operator*(), "  ");
    } else {
        const ProofFailure& f = *r.failure;
        Json attempts = Json::array();
        for (const RuleAttempt& a : f.attempts)
            attempts.push_back(Json{{"applicable", a.applicable},
                                    {"outcome", a.outcome},
                                    {"rule", a.rule_id}});
        Json fj = Json{{"attempts", attempts},
                       {"deepest", f.deepest},
                       {"notes", Json(f.notes)}};
        if (f.witness) fj["witness"] = witness_json(*f.witness);
        rep.machine = Json{{"failure", fj}, {"proved", false}};
        rep.exit_code = 2;
        out << "NOT PROVED\n";
        out << "deepest failed hypothesis: " << f.deepest << "\n";
        if (f.witness)
            out << "torsion witness: I=" << to_string(f.witness->subset) << "  Z/"
                << f.witness->torsion.front() << " in degree " << f.witness->degree
                << ", lands in moment-angle degree " << f.witness->mac_degree << "\n";
        for (const RuleAttempt& a : f.attempts)
            out << "  " << a.rule_id << ": " << a.outcome << "\n";
        for (const std::string& nte : f.notes) out << "note: " << nte << "\n";
    }
    rep.human = out.str();
    return rep;
}

Report report_quasitoric(const ParsedDocument& doc, const EngineOptions& opts) {
    if (!opts.n) throw std::invalid_argument("quasitoric needs --n (half the manifold dimension)");
    const int n = *opts.n;
    const SimplicialComplex& K = doc.complex;
    const int m = K.vertex_count();
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    if (K.dim() != n - 1)
        throw std::invalid_argument("a quasitoric manifold of dimension " +
                                    std::to_string(2 * n) + " sits over a complex of dimension " +
                                    std::to_string(n - 1) + ", got " + std::to_string(K.dim()));
    SphereEvidence ev = sphere_evidence(K, n - 1);
    if (ev.grade == SphereGrade::Fails)
        throw HypothesisError(Hypothesis::SphereEvidenceFails,
                              "K must triangulate S^" + std::to_string(n - 1) +
                                  " (the boundary of the quotient polytope's dual)");

    std::string statement = "for any quasitoric manifold M over the simple polytope dual to "
                            "K: Omega M ~ T^" + std::to_string(m - n) +
                            " x Omega Z_K, a torus factor times the loop space of the "
                            "moment-angle complex";
    if (is_boundary_of_simplex(K))
        statement += "; here Z_K = S^" + std::to_string(2 * m - 1) + ", so Omega M ~ T^" +
                     std::to_string(m - n) + " x Omega S^" + std::to_string(2 * m - 1);
    MacHomology zk = mac_homology(K, opts.cap);

    Certificate c;
    c.goal = "loop-space splitting of a quasitoric manifold of dimension " +
             std::to_string(2 * n);
    c.rule_id = "quasitoric-loop-splitting";
    c.statement = statement;
    c.facts.push_back(make_fact("classify", Json{{"complex", complex_to_json(K)}}, opts.cap));
    c.facts.push_back(make_fact("sphere-evidence",
                                Json{{"complex", complex_to_json(K)}, {"n", n - 1}}, opts.cap));
    if (ev.grade != SphereGrade::Verified) {
        c.grading = Grading::Conditional;
        c.unverified.push_back("the geometric realization of K is S^" + std::to_string(n - 1) +
                               " (sphere evidence is homology-level)");
    }

    std::string verdict;
    Json verdict_detail;
    int exit_code = 0;
    if (2 * n == 4 || 2 * n == 6 || 2 * n == 8) {
        ProverResult r = p_membership(K, PairClass::moment_angle(m), opts.cap);
        if (r.proved) {
            verdict = "in-P";
            c.premises.push_back(*r.certificate);
            if (r.certificate->grading == Grading::Conditional) {
                c.grading = Grading::Conditional;
                for (const std::string& u : r.certificate->unverified)
                    c.unverified.push_back(u);
            }
            c.notes.push_back("T^" + std::to_string(m - n) +
                              " is a product of spheres; the torus factor stays in P");
        } else {
            verdict = "not-derived";
            verdict_detail = Json{{"deepest", r.failure->deepest}};
            exit_code = 2;
        }
    } else {
        verdict = "unknown";
        c.notes.push_back("the P-membership characterization is implemented for manifold "
                          "dimension 4, 6 and 8 only");
        exit_code = 2;
    }

    Report rep;
    rep.exit_code = exit_code;
    rep.machine = Json{{"certificate", certificate_to_json(c)},
                       {"manifold_dim", 2 * n},
                       {"p_verdict", verdict},
                       {"statement", statement},
                       {"torus_rank", m - n},
                       {"zk", Json{{"homology", profile_to_json(zk.total)},
                                   {"poincare", zk.total.poincare()}}}};
    if (!verdict_detail.is_null()) rep.machine["p_verdict_detail"] = verdict_detail;

    std::ostringstream out;
    out << "complex: " << complex_line(K) << "\n";
    out << statement << "\n";
    out << "moment-angle complex homology: " << zk.total.poincare() << "\n";
    out << "P verdict for Omega M: " << verdict << "\n";
    if (verdict == "not-derived")
        out << "  " << verdict_detail["deepest"].get<std::string>() << "\n";
    append_certificate(out, c, "  ");
    rep.human = out.str();
    return rep;
}

Json input_block(const ParsedDocument& doc) {
    Json j{{"complex", complex_to_json(doc.complex)}, {"pairs", pairs_to_json(doc.pairs)}};
    if (doc.name) j["name"] = *doc.name;
    return j;
}

Json envelope(const std::string& command) {
    return Json{{"command", command},
                {"engine", Json{{"name", "polyprod"}, {"version", kEngineVersion}}}};
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw std::invalid_argument("empty document");
    if (text[pos] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("document parse: ") + e.what());
        }
        return document_from_json(j);
    }

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_m = false;
    int m = 0;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::vector<int> nums;
        long long v;
        while (ls >> v) {
            if (v < 0 || v > 64)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": vertex label " + std::to_string(v) +
                                            " out of range");
            nums.push_back(static_cast<int>(v));
        }
        if (!ls.eof()) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected whitespace-separated integers");
        }
        if (nums.empty()) continue;
        if (!have_m) {
            if (nums.size() != 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": the first line holds the vertex count only");
            m = nums[0];
            have_m = true;
        } else {
            facets.push_back(std::move(nums));
        }
    }
    if (!have_m) throw std::invalid_argument("document has no vertex-count line");
    SimplicialComplex K = SimplicialComplex::from_facets(m, facets);
    return ParsedDocument{std::move(K), PairClass::moment_angle(m), {}};
}

std::string document_text(const SimplicialComplex& K) {
    std::ostringstream out;
    out << K.vertex_count() << "\n";
    for (const VertexSet& f : K.facets()) {
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::string> engine_commands() {
    return {"classify",  "homology",          "mac",   "rz",      "skeleton-mac",
            "golod",     "decompose",         "loops", "prove-p", "skeleton-decompose",
            "quasitoric"};
}

Report run_on_complex(const std::string& command, const ParsedDocument& doc,
                      const EngineOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (command == "classify") rep = report_classify(doc, opts);
    else if (command == "homology") rep = report_homology(doc, opts);
    else if (command == "mac" || command == "rz" || command == "skeleton-mac")
        rep = report_mac(command, doc, opts);
    else if (command == "golod") rep = report_golod(doc, opts);
    else if (command == "decompose") rep = report_decompose(doc, opts);
    else if (command == "skeleton-decompose") rep = report_skeleton_decompose(doc, opts);
    else if (command == "loops") rep = report_loops(doc, opts);
    else if (command == "prove-p") rep = report_prove_p(doc, opts);
    else if (command == "quasitoric") rep = report_quasitoric(doc, opts);
    else throw std::invalid_argument("unknown command: " + command);

    Json wrapped = envelope(command);
    wrapped["input"] = input_block(doc);
    wrapped["result"] = std::move(rep.machine);
    if (opts.timing) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        const long long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        wrapped["timing_ms"] = ms;
        rep.human += "elapsed: " + std::to_string(ms) + " ms\n";
    }
    rep.machine = std::move(wrapped);
    return rep;
}

Report run_corpus_command(const std::string& name, const EngineOptions& opts) {
    std::string base = name;
    std::vector<long long> params;
    size_t paren = name.find('(');
    if (paren != std::string::npos) {
        if (name.back() != ')')
            throw std::invalid_argument("corpus: expected NAME or NAME(p1,p2,...)");
        base = name.substr(0, paren);
        std::string inner = name.substr(paren + 1, name.size() - paren - 2);
        std::istringstream ps(inner);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument("corpus: bad parameter '" + tok + "'");
            params.push_back(v);
        }
    }
    SimplicialComplex K = corpus_generate(base, params);
    Report rep;
    Json wrapped = envelope("corpus");
    wrapped["result"] = Json{{"complex", complex_to_json(K)},
                             {"document", document_text(K)},
                             {"name", name}};
    rep.machine = std::move(wrapped);
    rep.human = "# " + name + "\n" + document_text(K);
    return rep;
}

}  // namespace polyprod
