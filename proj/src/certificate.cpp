#include "polyprod/certificate.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "polyprod/hilton_milnor.hpp"
#include "polyprod/mac.hpp"
#include "polyprod/pseudo.hpp"

namespace polyprod {

const char* grading_name(Grading g) {
    return g == Grading::Proved ? "proved" : "conditional";
}

Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["m"] = K.vertex_count();
    if (K.is_void()) {
        j["void"] = true;
        return j;
    }
    Json facets = Json::array();
    for (VertexSet f : K.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m"))
        throw std::invalid_argument("complex document needs an \"m\" field");
    int m = j.at("m").get<int>();
    if (j.value("void", false)) return SimplicialComplex::void_complex(m);
    std::vector<std::vector<int>> facets;
    if (j.contains("facets")) facets = j.at("facets").get<std::vector<std::vector<int>>>();
    if (facets.empty()) return SimplicialComplex::empty_complex(m);
    return SimplicialComplex::from_facets(m, facets);
}

Json profile_to_json(const HomologyProfile& p) {
    Json out = Json::array();
    for (const auto& [d, g] : p.groups()) out.push_back(Json::array({d, g.rank, g.torsion}));
    return out;
}

HomologyProfile profile_from_json(const Json& j) {
    HomologyProfile p;
    for (const auto& entry : j) {
        int d = entry.at(0).get<int>();
        p.add_rank(d, entry.at(1).get<long long>());
        p.add_torsion(d, entry.at(2).get<std::vector<long long>>());
    }
    return p;
}

Json pairs_to_json(const PairClass& p) {
    Json j;
    j["kind"] = pair_kind_name(p.kind());
    if (p.kind() != PairKind::General) {
        j["m"] = p.size();
        return j;
    }
    Json atoms = Json::array();
    for (const auto& a : p.atoms()) {
        Json ja;
        ja["name"] = a.name;
        ja["suspension"] = a.is_suspension;
        ja["sigma_in_w"] = a.sigma_in_w;
        ja["profile"] = a.profile ? profile_to_json(*a.profile) : Json();
        atoms.push_back(std::move(ja));
    }
    j["atoms"] = atoms;
    return j;
}

PairClass pairs_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "moment-angle") return PairClass::moment_angle(j.at("m").get<int>());
    if (kind == "real") return PairClass::real(j.at("m").get<int>());
    if (kind != "general") throw std::invalid_argument("unknown pair kind: " + kind);
    std::vector<PairAtom> atoms;
    for (const auto& ja : j.at("atoms")) {
        PairAtom a;
        a.name = ja.at("name").get<std::string>();
        a.is_suspension = ja.at("suspension").get<bool>();
        a.sigma_in_w = ja.at("sigma_in_w").get<bool>();
        if (!ja.at("profile").is_null()) a.profile = profile_from_json(ja.at("profile"));
        atoms.push_back(std::move(a));
    }
    return PairClass::general(std::move(atoms));
}

Json expr_to_json(const ExprPtr& e) {
    Json j;
    j["kind"] = expr_kind_name(e->kind);
    switch (e->kind) {
        case ExprKind::Point:
            break;
        case ExprKind::Sphere:
            j["dim"] = e->n;
            break;
        case ExprKind::Atom:
            j["name"] = e->name;
            j["suspension"] = e->atom_suspension;
            j["profile"] = e->profile ? profile_to_json(*e->profile) : Json();
            break;
        case ExprKind::Wedge:
        case ExprKind::Product:
        case ExprKind::Smash: {
            Json parts = Json::array();
            for (const auto& c : e->children) parts.push_back(expr_to_json(c));
            j["parts"] = parts;
            break;
        }
        case ExprKind::HalfSmash:
            j["left"] = expr_to_json(e->children[0]);
            j["right"] = expr_to_json(e->children[1]);
            break;
        case ExprKind::Suspension:
            j["count"] = e->n;
            j["body"] = expr_to_json(e->children[0]);
            break;
        case ExprKind::Loop:
            j["body"] = expr_to_json(e->children[0]);
            break;
        case ExprKind::PolyProd:
            j["complex"] = complex_to_json(*e->complex);
            j["pairs"] = pairs_to_json(*e->pairs);
            break;
    }
    return j;
}

ExprPtr expr_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return point();
    if (kind == "sphere") return sphere(j.at("dim").get<int>());
    if (kind == "atom") {
        std::optional<HomologyProfile> profile;
        if (!j.at("profile").is_null()) profile = profile_from_json(j.at("profile"));
        return atom(j.at("name").get<std::string>(), std::move(profile),
                    j.at("suspension").get<bool>());
    }
    if (kind == "wedge" || kind == "product" || kind == "smash") {
        std::vector<ExprPtr> parts;
        for (const auto& c : j.at("parts")) parts.push_back(expr_from_json(c));
        if (kind == "wedge") return wedge(std::move(parts));
        if (kind == "product") return product(std::move(parts));
        return smash(std::move(parts));
    }
    if (kind == "half-smash")
        return half_smash(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
    if (kind == "suspension")
        return suspension(j.at("count").get<int>(), expr_from_json(j.at("body")));
    if (kind == "loop") return loop(expr_from_json(j.at("body")));
    if (kind == "polyprod")
        return poly_prod(complex_from_json(j.at("complex")), pairs_from_json(j.at("pairs")));
    throw std::invalid_argument("unknown expression kind: " + kind);
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["goal"] = c.goal;
    j["rule"] = c.rule_id;
    j["statement"] = c.statement;
    j["grading"] = grading_name(c.grading);
    j["unverified"] = c.unverified;
    Json facts = Json::array();
    for (const auto& f : c.facts) {
        Json jf;
        jf["check"] = f.check;
        jf["args"] = f.args;
        jf["expected"] = f.expected;
        facts.push_back(std::move(jf));
    }
    j["facts"] = facts;
    Json atts = Json::array();
    for (const auto& a : c.attestations) {
        Json ja;
        ja["name"] = a.name;
        ja["statement"] = a.statement;
        atts.push_back(std::move(ja));
    }
    j["attestations"] = atts;
    Json prem = Json::array();
    for (const auto& p : c.premises) prem.push_back(certificate_to_json(p));
    j["premises"] = prem;
    j["notes"] = c.notes;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.goal = j.at("goal").get<std::string>();
    c.rule_id = j.at("rule").get<std::string>();
    c.statement = j.at("statement").get<std::string>();
    std::string g = j.at("grading").get<std::string>();
    if (g == "proved") c.grading = Grading::Proved;
    else if (g == "conditional") c.grading = Grading::Conditional;
    else throw std::invalid_argument("unknown grading: " + g);
    c.unverified = j.at("unverified").get<std::vector<std::string>>();
    for (const auto& jf : j.at("facts"))
        c.facts.push_back(ComputedFact{jf.at("check").get<std::string>(), jf.at("args"),
                                       jf.at("expected")});
    for (const auto& ja : j.at("attestations"))
        c.attestations.push_back(Attestation{ja.at("name").get<std::string>(),
                                             ja.at("statement").get<std::string>()});
    for (const auto& jp : j.at("premises")) c.premises.push_back(certificate_from_json(jp));
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
}

namespace {

Json vset_json(VertexSet s) { return Json(s.vertices()); }

VertexSet vset_from(const Json& j) {
    return VertexSet::of(j.get<std::vector<int>>());
}

using CheckFn = std::function<Json(const Json&, int)>;

const std::map<std::string, CheckFn>& registry() {
    static const std::map<std::string, CheckFn> reg = {
        {"dimension",
         [](const Json& a, int) {
             return Json{{"dim", complex_from_json(a.at("complex")).dim()}};
         }},
        {"classify",
         [](const Json& a, int) {
             PseudoClass c = classify(complex_from_json(a.at("complex")));
             Json bd = Json::array();
             for (VertexSet f : c.boundary_faces) bd.push_back(vset_json(f));
             return Json{{"pure", c.pure},
                         {"dimension", c.dimension},
                         {"weak_pm_with_boundary", c.weak_pm_with_boundary},
                         {"boundary_faces", bd},
                         {"closed", c.closed},
                         {"dual_connected", c.dual_connected},
                         {"pseudomanifold", c.pseudomanifold},
                         {"pseudomanifold_with_boundary", c.pseudomanifold_with_boundary}};
         }},
        {"neighbourliness",
         [](const Json& a, int) {
             Neighbourliness n = neighbourliness(complex_from_json(a.at("complex")));
             return Json{{"k", n.k},
                         {"complete_one_skeleton", n.complete_one_skeleton}};
         }},
        {"surface-classify",
         [](const Json& a, int) {
             SurfaceClass s = surface_classify(complex_from_json(a.at("complex")));
             return Json{{"is_surface", s.is_surface},
                         {"orientable", s.orientable},
                         {"genus", s.genus},
                         {"cross_caps", s.cross_caps},
                         {"euler", s.euler}};
         }},
        {"reduced-homology",
         [](const Json& a, int) {
             return Json{{"profile",
                          profile_to_json(reduced_homology(complex_from_json(a.at("complex"))))}};
         }},
        {"torsion-free-full-subcomplexes",
         [](const Json& a, int cap) {
             auto scan = torsion_free_all_full_subcomplexes(
                 complex_from_json(a.at("complex")),
                 a.at("only_complete_one_skeleton").get<bool>(), cap);
             return Json{{"all_torsion_free", scan.all_torsion_free},
                         {"witness", scan.witness ? vset_json(*scan.witness) : Json()},
                         {"subsets_checked", scan.subsets_checked}};
         }},
        {"sphere-evidence",
         [](const Json& a, int) {
             SphereEvidence ev =
                 sphere_evidence(complex_from_json(a.at("complex")), a.at("n").get<int>());
             return Json{{"grade", sphere_grade_name(ev.grade)},
                         {"boundary_of_simplex", ev.boundary_of_simplex},
                         {"closed_pseudomanifold", ev.closed_pseudomanifold},
                         {"homology_matches", ev.homology_matches},
                         {"links_verified", ev.links_verified}};
         }},
        {"is-boundary-of-simplex",
         [](const Json& a, int) {
             return Json{{"value", is_boundary_of_simplex(complex_from_json(a.at("complex")))}};
         }},
        {"removal-pair",
         [](const Json& a, int) {
             auto rp = find_removal_pair(complex_from_json(a.at("complex")),
                                         vset_from(a.at("sigma")));
             return Json{{"found", rp.has_value()},
                         {"tau", rp ? vset_json(rp->tau) : Json()},
                         {"low_dim", rp ? rp->low_dim : false}};
         }},
        {"facet-filtration",
         [](const Json& a, int) {
             FacetFiltration f = facet_filtration(complex_from_json(a.at("complex")));
             Json steps = Json::array();
             for (const auto& s : f.steps)
                 steps.push_back(Json{{"sigma", vset_json(s.sigma)}, {"tau", vset_json(s.tau)}});
             return Json{{"steps", steps}, {"low_dim", f.low_dim}};
         }},
        {"deletion-hypotheses",
         [](const Json& a, int) {
             DeletionEvidence e = deletion_hypotheses(complex_from_json(a.at("complex")),
                                                      a.at("vertex").get<int>());
             return Json{{"pure", e.pure},
                         {"dimension", e.dimension},
                         {"weak_pm_with_nonempty_boundary", e.weak_pm_with_nonempty_boundary},
                         {"components_have_low_degree_node", e.components_have_low_degree_node},
                         {"all_pass", e.all_pass}};
         }},
        {"mac-homology",
         [](const Json& a, int cap) {
             return Json{{"profile",
                          profile_to_json(mac_homology(complex_from_json(a.at("complex")), cap).total)}};
         }},
        {"skeleton-mac-homology",
         [](const Json& a, int cap) {
             return Json{{"profile",
                          profile_to_json(
                              skeleton_mac_homology(complex_from_json(a.at("complex")), cap).total)}};
         }},
        {"rz-homology",
         [](const Json& a, int cap) {
             return Json{{"profile",
                          profile_to_json(rz_homology(complex_from_json(a.at("complex")), cap).total)}};
         }},
        {"desuspension-inner",
         [](const Json& a, int cap) {
             DesuspensionCheck c =
                 desuspension_criterion(complex_from_json(a.at("complex")), cap);
             return Json{{"hypothesis_holds", c.hypothesis_holds},
                         {"k", c.k},
                         {"inner_holds", c.inner.holds},
                         {"degree", c.inner.degree},
                         {"violating_subset",
                          c.inner.violating_subset ? vset_json(*c.inner.violating_subset) : Json()}};
         }},
        {"expr-homology",
         [](const Json& a, int cap) {
             return Json{{"profile",
                          profile_to_json(expr_homology(expr_from_json(a.at("expr")), cap))}};
         }},
        {"hilton-milnor",
         [](const Json& a, int) {
             HiltonMilnor hm = hilton_milnor(a.at("dims").get<std::vector<int>>(),
                                             a.at("cutoff").get<int>());
             Json factors = Json::array();
             for (const auto& f : hm.factors)
                 factors.push_back(Json::array({f.weight, f.sphere_dim, f.multiplicity}));
             return Json{{"factors", factors}, {"truncated", hm.truncated}};
         }},
    };
    return reg;
}

}  // namespace

Json run_fact_check(const std::string& check, const Json& args, int cap) {
    auto it = registry().find(check);
    if (it == registry().end())
        throw std::invalid_argument("unknown fact check: " + check);
    return it->second(args, cap);
}

ComputedFact make_fact(const std::string& check, Json args, int cap) {
    ComputedFact f;
    f.check = check;
    f.expected = run_fact_check(check, args, cap);
    f.args = std::move(args);
    return f;
}

namespace {

void revalidate_into(const Certificate& c, int cap, Revalidation& r) {
    for (const auto& f : c.facts) {
        ++r.facts_checked;
        Json got;
        try {
            got = run_fact_check(f.check, f.args, cap);
        } catch (const std::exception& ex) {
            r.ok = false;
            r.failures.push_back(c.goal + " / " + f.check + ": threw " + ex.what());
            continue;
        }
        if (got != f.expected) {
            r.ok = false;
            r.failures.push_back(c.goal + " / " + f.check + ": result drifted");
        }
    }
    for (const auto& p : c.premises) revalidate_into(p, cap, r);
}

}  // namespace

Revalidation revalidate(const Certificate& c, int cap) {
    Revalidation r;
    revalidate_into(c, cap, r);
    return r;
}

}  // namespace polyprod
