#include "polyprod/space_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyprod/errors.hpp"
#include "polyprod/mac.hpp"

namespace polyprod {

const char* expr_kind_name(ExprKind k) {
    switch (k) {
        case ExprKind::Point: return "point";
        case ExprKind::Sphere: return "sphere";
        case ExprKind::Atom: return "atom";
        case ExprKind::Wedge: return "wedge";
        case ExprKind::Product: return "product";
        case ExprKind::Smash: return "smash";
        case ExprKind::HalfSmash: return "half-smash";
        case ExprKind::Suspension: return "suspension";
        case ExprKind::Loop: return "loop";
        case ExprKind::PolyProd: return "polyprod";
    }
    return "unknown";
}

namespace {

ExprPtr make(SpaceExpr e) { return std::make_shared<const SpaceExpr>(std::move(e)); }

bool is_point(const ExprPtr& e) { return e->kind == ExprKind::Point; }

}  // namespace

ExprPtr point() {
    static const ExprPtr p = make(SpaceExpr{});
    return p;
}

ExprPtr sphere(int d) {
    if (d < 0) throw std::invalid_argument("sphere dimension must be >= 0");
    SpaceExpr e;
    e.kind = ExprKind::Sphere;
    e.n = d;
    return make(std::move(e));
}

ExprPtr atom(std::string name, std::optional<HomologyProfile> profile, bool is_suspension) {
    SpaceExpr e;
    e.kind = ExprKind::Atom;
    e.name = std::move(name);
    e.profile = std::move(profile);
    e.atom_suspension = is_suspension;
    return make(std::move(e));
}

ExprPtr atom_from_pair(const PairAtom& a) {
    // spheres stay structural so the rewrite rules see them
    if (a.profile) {
        if (a.profile->trivial() && a.name == "*") return point();
        auto degs = a.profile->degrees();
        if (degs.size() == 1 && a.profile->rank(degs[0]) == 1 &&
            a.profile->torsion(degs[0]).empty() && a.name == "S^" + std::to_string(degs[0]))
            return sphere(degs[0]);
    }
    return atom(a.name, a.profile, a.is_suspension);
}

ExprPtr wedge(std::vector<ExprPtr> parts) {
    SpaceExpr e;
    e.kind = ExprKind::Wedge;
    e.children = std::move(parts);
    return make(std::move(e));
}

ExprPtr product(std::vector<ExprPtr> parts) {
    SpaceExpr e;
    e.kind = ExprKind::Product;
    e.children = std::move(parts);
    return make(std::move(e));
}

ExprPtr smash(std::vector<ExprPtr> parts) {
    SpaceExpr e;
    e.kind = ExprKind::Smash;
    e.children = std::move(parts);
    return make(std::move(e));
}

ExprPtr half_smash(ExprPtr left, ExprPtr right) {
    SpaceExpr e;
    e.kind = ExprKind::HalfSmash;
    e.children = {std::move(left), std::move(right)};
    return make(std::move(e));
}

ExprPtr suspension(int count, ExprPtr body) {
    if (count < 0) throw std::invalid_argument("suspension count must be >= 0");
    if (count == 0) return body;
    SpaceExpr e;
    e.kind = ExprKind::Suspension;
    e.n = count;
    e.children = {std::move(body)};
    return make(std::move(e));
}

ExprPtr loop(ExprPtr body) {
    SpaceExpr e;
    e.kind = ExprKind::Loop;
    e.children = {std::move(body)};
    return make(std::move(e));
}

ExprPtr poly_prod(SimplicialComplex K, PairClass pairs) {
    if (pairs.size() != K.vertex_count())
        throw std::invalid_argument("pair class size must match the vertex count");
    SpaceExpr e;
    e.kind = ExprKind::PolyProd;
    e.complex = std::move(K);
    e.pairs = std::move(pairs);
    return make(std::move(e));
}

namespace {

int cmp_int(long long a, long long b) { return a < b ? -1 : a > b ? 1 : 0; }

int profile_cmp(const std::optional<HomologyProfile>& a,
                const std::optional<HomologyProfile>& b) {
    if (a.has_value() != b.has_value()) return a.has_value() ? 1 : -1;
    if (!a) return 0;
    auto ia = a->groups().begin(), ea = a->groups().end();
    auto ib = b->groups().begin(), eb = b->groups().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (int c = cmp_int(ia->first, ib->first)) return c;
        if (int c = cmp_int(ia->second.rank, ib->second.rank)) return c;
        const auto& ta = ia->second.torsion;
        const auto& tb = ib->second.torsion;
        if (int c = cmp_int(static_cast<long long>(ta.size()),
                            static_cast<long long>(tb.size())))
            return c;
        for (std::size_t i = 0; i < ta.size(); ++i)
            if (int c = cmp_int(ta[i], tb[i])) return c;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

int rank_of(ExprKind k) {
    switch (k) {
        case ExprKind::Point: return 0;
        case ExprKind::Sphere: return 1;
        case ExprKind::Atom: return 2;
        case ExprKind::Suspension: return 3;
        case ExprKind::Wedge: return 4;
        case ExprKind::Product: return 5;
        case ExprKind::Smash: return 6;
        case ExprKind::HalfSmash: return 7;
        case ExprKind::Loop: return 8;
        case ExprKind::PolyProd: return 9;
    }
    return 10;
}

std::string pairs_key(const PairClass& p) {
    std::string out = pair_kind_name(p.kind());
    for (const auto& a : p.atoms()) {
        out += "|";
        out += a.name;
        out += a.is_suspension ? "+s" : "-s";
        out += a.sigma_in_w ? "+w" : "-w";
    }
    return out;
}

}  // namespace

int expr_cmp(const ExprPtr& a, const ExprPtr& b) {
    if (int c = cmp_int(rank_of(a->kind), rank_of(b->kind))) return c;
    switch (a->kind) {
        case ExprKind::Point:
            return 0;
        case ExprKind::Sphere:
            return cmp_int(a->n, b->n);
        case ExprKind::Atom: {
            if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
            if (int c = cmp_int(a->atom_suspension, b->atom_suspension)) return c;
            return profile_cmp(a->profile, b->profile);
        }
        case ExprKind::Suspension:
            if (int c = cmp_int(a->n, b->n)) return c;
            return expr_cmp(a->children[0], b->children[0]);
        case ExprKind::PolyProd: {
            std::string ka = a->complex->to_text(), kb = b->complex->to_text();
            if (int c = ka.compare(kb)) return c < 0 ? -1 : 1;
            std::string pa = pairs_key(*a->pairs), pb = pairs_key(*b->pairs);
            if (int c = pa.compare(pb)) return c < 0 ? -1 : 1;
            return 0;
        }
        default: {
            if (int c = cmp_int(static_cast<long long>(a->children.size()),
                                static_cast<long long>(b->children.size())))
                return c;
            for (std::size_t i = 0; i < a->children.size(); ++i)
                if (int c = expr_cmp(a->children[i], b->children[i])) return c;
            return 0;
        }
    }
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_cmp(a, b) == 0; }

bool is_suspension(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Point: return true;
        case ExprKind::Sphere: return e->n >= 1;
        case ExprKind::Atom: return e->atom_suspension;
        case ExprKind::Wedge: {
            for (const auto& c : e->children)
                if (!is_suspension(c)) return false;
            return true;
        }
        case ExprKind::Smash: {
            for (const auto& c : e->children)
                if (is_suspension(c)) return true;
            return false;
        }
        case ExprKind::Suspension: return e->n >= 1 || is_suspension(e->children[0]);
        case ExprKind::PolyProd:
            return e->complex && is_boundary_of_simplex(*e->complex);
        default: return false;
    }
}

namespace {

// `susp` is true when the subterm sits under at least one ambient
// suspension, which licenses the stable product splitting
ExprPtr norm(const ExprPtr& e, bool susp);

ExprPtr norm_wedge(std::vector<ExprPtr> parts, bool susp) {
    std::vector<ExprPtr> flat;
    for (auto& p : parts) {
        ExprPtr q = norm(p, susp);
        if (is_point(q)) continue;
        if (q->kind == ExprKind::Wedge)
            flat.insert(flat.end(), q->children.begin(), q->children.end());
        else
            flat.push_back(std::move(q));
    }
    if (flat.empty()) return point();
    if (flat.size() == 1) return flat[0];
    std::sort(flat.begin(), flat.end(),
              [](const ExprPtr& a, const ExprPtr& b) { return expr_cmp(a, b) < 0; });
    return wedge(std::move(flat));
}

ExprPtr norm_product(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> flat;
    for (auto& p : parts) {
        ExprPtr q = norm(p, false);
        if (is_point(q)) continue;
        if (q->kind == ExprKind::Product)
            flat.insert(flat.end(), q->children.begin(), q->children.end());
        else
            flat.push_back(std::move(q));
    }
    if (flat.empty()) return point();
    if (flat.size() == 1) return flat[0];
    std::sort(flat.begin(), flat.end(),
              [](const ExprPtr& a, const ExprPtr& b) { return expr_cmp(a, b) < 0; });
    return product(std::move(flat));
}

// wedge over all nonempty sub-multisets of `factors`, each smashed with
// `rest`; this is the stable splitting of a product inside a smash
ExprPtr split_product_in_smash(const std::vector<ExprPtr>& factors,
                               std::vector<ExprPtr> rest, bool susp) {
    std::vector<ExprPtr> summands;
    const std::size_t r = factors.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
        std::vector<ExprPtr> sm = rest;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i)) sm.push_back(factors[i]);
        summands.push_back(smash(std::move(sm)));
    }
    return norm(wedge(std::move(summands)), susp);
}

ExprPtr norm_smash(std::vector<ExprPtr> parts, bool susp) {
    std::vector<ExprPtr> flat;
    int shift = 0;
    for (auto& p : parts) {
        ExprPtr q = norm(p, susp);
        if (is_point(q)) return point();
        if (q->kind == ExprKind::Sphere) {
            shift += q->n;  // S^0 is the unit
            continue;
        }
        if (q->kind == ExprKind::Suspension) {
            shift += q->n;
            q = q->children[0];
        }
        if (q->kind == ExprKind::Smash)
            flat.insert(flat.end(), q->children.begin(), q->children.end());
        else
            flat.push_back(std::move(q));
    }
    if (flat.empty()) return sphere(shift);
    // distribute over a wedge factor
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i]->kind != ExprKind::Wedge) continue;
        std::vector<ExprPtr> summands;
        for (const auto& s : flat[i]->children) {
            std::vector<ExprPtr> sm;
            sm.reserve(flat.size());
            for (std::size_t j = 0; j < flat.size(); ++j) sm.push_back(j == i ? s : flat[j]);
            summands.push_back(smash(std::move(sm)));
        }
        return norm(suspension(shift, wedge(std::move(summands))), susp);
    }
    // split a product factor when a suspension is available
    bool have_susp = susp || shift > 0;
    for (const auto& f : flat)
        if (is_suspension(f)) have_susp = true;
    if (have_susp) {
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (flat[i]->kind != ExprKind::Product) continue;
            std::vector<ExprPtr> rest;
            for (std::size_t j = 0; j < flat.size(); ++j)
                if (j != i) rest.push_back(flat[j]);
            ExprPtr split = split_product_in_smash(flat[i]->children, std::move(rest),
                                                   susp || shift > 0);
            return norm(suspension(shift, split), susp);
        }
    }
    std::sort(flat.begin(), flat.end(),
              [](const ExprPtr& a, const ExprPtr& b) { return expr_cmp(a, b) < 0; });
    ExprPtr body = flat.size() == 1 ? flat[0] : smash(std::move(flat));
    if (shift == 0) return body;
    return norm(suspension(shift, body), susp);
}

ExprPtr norm_suspension(int count, const ExprPtr& raw_body, bool susp) {
    ExprPtr body = norm(raw_body, true);
    if (is_point(body)) return point();
    if (body->kind == ExprKind::Sphere) return sphere(body->n + count);
    if (body->kind == ExprKind::Suspension)
        return norm_suspension(count + body->n, body->children[0], susp);
    if (body->kind == ExprKind::Wedge) {
        std::vector<ExprPtr> parts;
        parts.reserve(body->children.size());
        for (const auto& c : body->children) parts.push_back(suspension(count, c));
        return norm(wedge(std::move(parts)), susp);
    }
    if (body->kind == ExprKind::Product) {
        ExprPtr split = split_product_in_smash(body->children, {}, true);
        return norm(suspension(count, split), susp);
    }
    return suspension(count, body);
}

ExprPtr norm_half_smash(const ExprPtr& rawa, const ExprPtr& rawb, bool susp) {
    ExprPtr a = norm(rawa, false);
    ExprPtr b = norm(rawb, false);
    if (is_point(b)) return a;
    if (is_point(a)) return point();
    if (is_suspension(a)) return norm(wedge({a, smash({a, b})}), susp);
    return half_smash(a, b);
}

ExprPtr norm_poly_prod(const ExprPtr& e, bool susp) {
    const SimplicialComplex& K = *e->complex;
    const PairClass& P = *e->pairs;
    if (K.is_void()) return e;
    const int m = K.vertex_count();
    VertexSet support = K.vertex_support();

    if (support.empty()) {  // K = {∅}: every coordinate stays in A_i
        std::vector<ExprPtr> parts;
        for (int i = 1; i <= m; ++i) parts.push_back(atom_from_pair(P.atom(i)));
        return norm(product(std::move(parts)), susp);
    }
    if (support.size() < m) {  // ghost coordinates split off as factors
        Subcomplex sub = full_subcomplex(K, support);
        std::vector<ExprPtr> parts{poly_prod(sub.complex, P.restricted(sub.vertex_map))};
        for (int g : K.ghost_vertices().vertices()) parts.push_back(atom_from_pair(P.atom(g)));
        return norm(product(std::move(parts)), susp);
    }
    if (K.facets().size() == 1 && K.facets()[0] == VertexSet::full(m))
        return point();  // product of cones
    if (is_boundary_of_simplex(K)) {
        std::vector<ExprPtr> parts;
        for (int i = 1; i <= m; ++i) parts.push_back(atom_from_pair(P.atom(i)));
        return norm(suspension(m - 1, smash(std::move(parts))), susp);
    }
    return e;
}

ExprPtr norm(const ExprPtr& e, bool susp) {
    switch (e->kind) {
        case ExprKind::Point:
        case ExprKind::Sphere:
        case ExprKind::Atom:
            return e;
        case ExprKind::Wedge:
            return norm_wedge(e->children, susp);
        case ExprKind::Product:
            return norm_product(e->children);
        case ExprKind::Smash:
            return norm_smash(e->children, susp);
        case ExprKind::HalfSmash:
            return norm_half_smash(e->children[0], e->children[1], susp);
        case ExprKind::Suspension:
            return norm_suspension(e->n, e->children[0], susp);
        case ExprKind::Loop: {
            ExprPtr body = norm(e->children[0], false);
            if (body == e->children[0]) return e;
            return loop(body);
        }
        case ExprKind::PolyProd:
            return norm_poly_prod(e, susp);
    }
    return e;
}

}  // namespace

ExprPtr normalize(const ExprPtr& e) {
    ExprPtr cur = e;
    for (int round = 0; round < 64; ++round) {
        ExprPtr next = norm(cur, false);
        if (expr_equal(next, cur)) return next;
        cur = next;
    }
    throw std::logic_error("normalization did not reach a fixpoint");
}

HomologyProfile expr_homology(const ExprPtr& e, int cap) {
    switch (e->kind) {
        case ExprKind::Point:
            return HomologyProfile{};
        case ExprKind::Sphere:
            return HomologyProfile::sphere(e->n);
        case ExprKind::Atom:
            if (!e->profile)
                throw HypothesisError(Hypothesis::ProfileUnknown,
                                      "atom " + e->name + " carries no homology profile");
            return *e->profile;
        case ExprKind::Wedge: {
            HomologyProfile out;
            for (const auto& c : e->children) out.direct_sum(expr_homology(c, cap));
            return out;
        }
        case ExprKind::Product: {
            if (e->children.empty()) return HomologyProfile{};
            HomologyProfile out = expr_homology(e->children[0], cap);
            for (std::size_t i = 1; i < e->children.size(); ++i)
                out = product_reduced(out, expr_homology(e->children[i], cap));
            return out;
        }
        case ExprKind::Smash: {
            HomologyProfile out = HomologyProfile::sphere(0);  // unit
            for (const auto& c : e->children) out = tensor_reduced(out, expr_homology(c, cap));
            return out;
        }
        case ExprKind::HalfSmash: {
            // A retracts off A ⋊ B with cofibre A ∧ B, so the groups split
            HomologyProfile a = expr_homology(e->children[0], cap);
            HomologyProfile b = expr_homology(e->children[1], cap);
            HomologyProfile out = tensor_reduced(a, b);
            out.direct_sum(a);
            return out;
        }
        case ExprKind::Suspension:
            return expr_homology(e->children[0], cap).shifted(e->n);
        case ExprKind::Loop:
            throw HypothesisError(Hypothesis::LoopNotComputable,
                                  "no homology for loop-space nodes");
        case ExprKind::PolyProd: {
            switch (e->pairs->kind()) {
                case PairKind::MomentAngle: return mac_homology(*e->complex, cap).total;
                case PairKind::Real: return rz_homology(*e->complex, cap).total;
                case PairKind::General:
                    throw HypothesisError(Hypothesis::PolyProdNotComputable,
                                          "general pair classes have no homology engine");
            }
            return HomologyProfile{};
        }
    }
    return HomologyProfile{};
}

namespace {

std::string zk_token(const SpaceExpr& e) {
    std::string kind;
    switch (e.pairs->kind()) {
        case PairKind::MomentAngle: kind = "ma"; break;
        case PairKind::Real: kind = "rz"; break;
        case PairKind::General: kind = "gen"; break;
    }
    return kind + " \"" + e.complex->to_text() + "\"";
}

}  // namespace

std::string to_prefix(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Point: return "*";
        case ExprKind::Sphere: return "S^" + std::to_string(e->n);
        case ExprKind::Atom: return "(atom " + e->name + ")";
        case ExprKind::Wedge:
        case ExprKind::Product:
        case ExprKind::Smash:
        case ExprKind::HalfSmash: {
            std::string op = e->kind == ExprKind::Wedge     ? "v"
                             : e->kind == ExprKind::Product ? "x"
                             : e->kind == ExprKind::Smash   ? "sm"
                                                            : "hs";
            std::string out = "(" + op;
            for (const auto& c : e->children) out += " " + to_prefix(c);
            return out + ")";
        }
        case ExprKind::Suspension:
            return "(susp " + std::to_string(e->n) + " " + to_prefix(e->children[0]) + ")";
        case ExprKind::Loop:
            return "(loop " + to_prefix(e->children[0]) + ")";
        case ExprKind::PolyProd:
            return "(zk " + zk_token(*e) + ")";
    }
    return "?";
}

namespace {

// wrap in parentheses when an infix child binds looser than its context
std::string display(const ExprPtr& e, int context) {
    auto paren = [&](int mine, const std::string& s) {
        return mine < context ? "(" + s + ")" : s;
    };
    switch (e->kind) {
        case ExprKind::Point: return "*";
        case ExprKind::Sphere: return "S^" + std::to_string(e->n);
        case ExprKind::Atom: return e->name;
        case ExprKind::Wedge: {
            std::string out;
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) out += " v ";
                out += display(e->children[i], 2);
            }
            return paren(1, out);
        }
        case ExprKind::Product: {
            std::string out;
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) out += " x ";
                out += display(e->children[i], 3);
            }
            return paren(2, out);
        }
        case ExprKind::Smash: {
            std::string out;
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) out += " ^ ";
                out += display(e->children[i], 4);
            }
            return paren(3, out);
        }
        case ExprKind::HalfSmash:
            return paren(3, display(e->children[0], 4) + " |x " + display(e->children[1], 4));
        case ExprKind::Suspension: {
            std::string head = e->n == 1 ? "Susp" : "Susp^" + std::to_string(e->n);
            return head + "(" + display(e->children[0], 0) + ")";
        }
        case ExprKind::Loop:
            return "Omega(" + display(e->children[0], 0) + ")";
        case ExprKind::PolyProd: {
            std::string head;
            switch (e->pairs->kind()) {
                case PairKind::MomentAngle: head = "Z"; break;
                case PairKind::Real: head = "RZ"; break;
                case PairKind::General: head = "PP"; break;
            }
            return head + "{m=" + std::to_string(e->complex->vertex_count()) +
                   ",facets=" + std::to_string(e->complex->facets().size()) + "}";
        }
    }
    return "?";
}

}  // namespace

std::string to_display(const ExprPtr& e) { return display(e, 0); }

}  // namespace polyprod
