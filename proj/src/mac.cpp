#include "polyprod/mac.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace polyprod {

const char* mac_variant_name(MacVariant v) {
    switch (v) {
        case MacVariant::MomentAngle: return "moment-angle";
        case MacVariant::Real: return "real";
        case MacVariant::Skeleton: return "skeleton";
    }
    return "?";
}

const char* sphere_grade_name(SphereGrade g) {
    switch (g) {
        case SphereGrade::Verified: return "verified";
        case SphereGrade::HomologyLevel: return "homology-level";
        case SphereGrade::Fails: return "fails";
    }
    return "?";
}

const char* golod_verdict_name(GolodVerdict v) {
    switch (v) {
        case GolodVerdict::Golod: return "Golod";
        case GolodVerdict::MinimallyNonGolod: return "MinimallyNonGolod";
        case GolodVerdict::NotGolod: return "NotGolod";
        case GolodVerdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

int thread_count() {
    const char* env = std::getenv("POLYPROD_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t < 1 ? 1 : std::min(t, 64);
}

// reduced homology of K_I if nonzero; cones are skipped without running the
// chain complex
std::optional<HomologyProfile> subset_profile(const SimplicialComplex& K, VertexSet I) {
    Subcomplex sub = full_subcomplex(K, I);
    const auto& facets = sub.complex.facets();
    if (facets.empty()) {
        // I meets no face: K_I = {∅}, one class in degree -1
        HomologyProfile p;
        p.add_rank(-1, 1);
        return p;
    }
    VertexSet apex = facets.front();
    for (VertexSet f : facets) apex = apex & f;
    if (!apex.empty()) return std::nullopt;  // cone, contractible
    HomologyProfile p = reduced_homology(sub.complex);
    if (p.trivial()) return std::nullopt;
    return p;
}

MacHomology subset_sum(const SimplicialComplex& K, MacVariant variant, int cap) {
    if (K.is_void())
        throw std::invalid_argument("polyhedral product over the void complex");
    const int m = K.vertex_count();
    if (m > cap)
        throw HypothesisError(Hypothesis::CapExceeded,
                              "enumeration over " + std::to_string(m) +
                                  " vertices exceeds cap " + std::to_string(cap) +
                                  " (raise it explicitly to proceed)");

    MacHomology out;
    out.variant = variant;
    const std::uint64_t end = (m == 0) ? 1 : (std::uint64_t{1} << m);
    const std::uint64_t full = end - 1;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                         std::vector<SubsetContribution>& sink, long long& count) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            VertexSet I(mask);
            if (variant == MacVariant::Skeleton && mask == full) continue;
            if (K.is_face(I)) continue;
            ++count;
            auto p = subset_profile(K, I);
            if (!p) continue;
            SubsetContribution c;
            c.I = I;
            c.shift = (variant == MacVariant::Real) ? 1 : I.size() + 1;
            c.profile = p->shifted(c.shift);
            sink.push_back(std::move(c));
        }
    };

    const int threads = thread_count();
    if (threads <= 1 || end < 1024) {
        run_range(1, end, out.contributions, out.subsets_enumerated);
    } else {
        std::vector<std::vector<SubsetContribution>> sinks(threads);
        std::vector<long long> counts(threads, 0);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (end - 1) / threads + 1;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = 1 + chunk * t;
            std::uint64_t hi = std::min(end, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, lo, hi, t] { run_range(lo, hi, sinks[t], counts[t]); });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < threads; ++t) {
            out.subsets_enumerated += counts[t];
            for (auto& c : sinks[t]) out.contributions.push_back(std::move(c));
        }
    }

    std::sort(out.contributions.begin(), out.contributions.end(),
              [](const SubsetContribution& a, const SubsetContribution& b) {
                  if (a.I.size() != b.I.size()) return a.I.size() < b.I.size();
                  return lex_less(a.I, b.I);
              });
    for (const auto& c : out.contributions) out.total.direct_sum(c.profile);
    return out;
}

}  // namespace

MacHomology mac_homology(const SimplicialComplex& K, int cap) {
    return subset_sum(K, MacVariant::MomentAngle, cap);
}

MacHomology skeleton_mac_homology(const SimplicialComplex& K, int cap) {
    return subset_sum(K, MacVariant::Skeleton, cap);
}

MacHomology rz_homology(const SimplicialComplex& K, int cap) {
    return subset_sum(K, MacVariant::Real, cap);
}

bool is_boundary_of_simplex(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (K.is_void() || m < 2) return false;
    if (static_cast<int>(K.facets().size()) != m) return false;
    for (VertexSet f : K.facets())
        if (f.size() != m - 1) return false;
    return true;  // m distinct (m-1)-subsets of [m] are all of them
}

Subcomplex link_complex(const SimplicialComplex& K, int v) {
    if (v < 1 || v > K.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::vector<VertexSet> facets;
    VertexSet support;
    for (VertexSet f : K.facets()) {
        if (!f.contains(v)) continue;
        VertexSet rest = f.without(v);
        if (rest.empty()) continue;
        facets.push_back(rest);
        support = support | rest;
    }
    SimplicialComplex on_m = SimplicialComplex::from_facet_sets(K.vertex_count(), facets);
    return full_subcomplex(on_m, support);
}

SphereEvidence sphere_evidence(const SimplicialComplex& K, int n) {
    SphereEvidence ev;
    ev.n = n;
    if (n < 0) {
        ev.notes.push_back("sphere dimension must be nonnegative");
        return ev;
    }
    if (K.is_void()) {
        ev.notes.push_back("void complex");
        return ev;
    }

    ev.boundary_of_simplex = is_boundary_of_simplex(K) && K.dim() == n;
    if (ev.boundary_of_simplex) {
        ev.grade = SphereGrade::Verified;
        ev.closed_pseudomanifold = true;
        ev.homology_matches = true;
        ev.links_verified = true;
        ev.notes.push_back("boundary of a simplex");
        return ev;
    }

    PseudoClass c = classify(K);
    ev.closed_pseudomanifold = c.pseudomanifold && c.dimension == n;
    if (!ev.closed_pseudomanifold) {
        ev.notes.push_back("not a closed pseudomanifold of dimension " + std::to_string(n));
        return ev;
    }
    ev.homology_matches = reduced_homology(K) == HomologyProfile::sphere(n);
    if (!ev.homology_matches) {
        ev.notes.push_back("reduced homology differs from a sphere's");
        return ev;
    }

    if (n == 0) {
        // closed 0-pseudomanifold with S^0 homology: two points
        ev.grade = SphereGrade::Verified;
        return ev;
    }
    if (n == 1) {
        // a closed connected 1-pseudomanifold is a single cycle
        ev.grade = SphereGrade::Verified;
        return ev;
    }
    if (n == 2) {
        SurfaceClass s = surface_classify(K);
        if (s.is_surface && s.orientable && s.genus == 0) {
            ev.grade = SphereGrade::Verified;
        } else {
            ev.notes.push_back("surface recognition failed: " +
                               (s.reason.empty() ? "wrong genus" : s.reason));
        }
        return ev;
    }
    if (n == 3) {
        ev.links_verified = true;
        for (int v : K.vertex_support().vertices()) {
            SurfaceClass s = surface_classify(link_complex(K, v).complex);
            if (!(s.is_surface && s.orientable && s.genus == 0)) {
                ev.links_verified = false;
                ev.notes.push_back("link of vertex " + std::to_string(v) +
                                   " is not a 2-sphere");
                break;
            }
        }
        if (ev.links_verified) {
            ev.grade = SphereGrade::HomologyLevel;
            ev.notes.push_back("links are 2-spheres and homology matches; "
                               "3-sphere recognition is out of scope");
        }
        return ev;
    }
    ev.grade = SphereGrade::HomologyLevel;
    ev.notes.push_back("closed pseudomanifold with matching homology; "
                       "links unchecked in dimension >= 4");
    return ev;
}

DesuspensionCheck desuspension_criterion(const SimplicialComplex& K, int cap) {
    DesuspensionCheck d;
    const int dim = K.dim();
    d.odd_dimension = dim >= 3 && dim % 2 == 1;
    d.k = d.odd_dimension ? (dim - 1) / 2 : -1;
    PseudoClass c = classify(K);
    d.pseudomanifold = c.pseudomanifold;
    if (d.odd_dimension) {
        Neighbourliness nb = neighbourliness(K);
        d.neighbourly_enough = nb.k >= d.k;
    }
    d.hypothesis_holds = d.odd_dimension && d.pseudomanifold && d.neighbourly_enough;
    if (!d.hypothesis_holds) {
        d.conclusion = "hypotheses fail; no desuspension statement";
        return d;
    }

    const int m = K.vertex_count();
    if (m > cap)
        throw HypothesisError(Hypothesis::CapExceeded, "subset enumeration exceeds cap");
    d.inner.degree = d.k;
    d.inner.holds = true;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = 1; mask < full && d.inner.holds; ++mask) {
        VertexSet I(mask);
        ++d.inner.subsets_checked;
        HomologyProfile p = reduced_homology(full_subcomplex(K, I).complex);
        if (p.trivial()) continue;
        if (!p.torsion_free() || p.min_degree() != d.k || p.max_degree() != d.k) {
            d.inner.holds = false;
            d.inner.violating_subset = I;
        }
    }
    d.conclusion = d.inner.holds
        ? "proper full subcomplexes are wedges of spheres in homology; the "
          "stable splitting over every vertex deletion desuspends"
        : "inner concentration check failed";
    return d;
}

GolodStatus golod_status(const SimplicialComplex& K, int cap) {
    GolodStatus g;
    if (K.is_void() || K.facets().empty())
        throw std::invalid_argument("golod status needs a nonempty complex");
    const int n = K.dim();
    g.evidence = sphere_evidence(K, n);

    if (is_boundary_of_simplex(K)) {
        g.verdict = GolodVerdict::Golod;
        g.rule_id = "sphere-golod-dichotomy";
        g.justification = "the boundary of a simplex is the only Golod sphere "
                          "triangulation; K is one";
        return g;
    }

    // neighbourly odd-dimensional pseudomanifolds: Golod or minimally
    // non-Golod, and sphere evidence upgrades to the latter
    if (n >= 3 && n % 2 == 1) {
        const int k = (n - 1) / 2;
        PseudoClass c = classify(K);
        if (k >= 1 && c.pseudomanifold && neighbourliness(K).k >= k) {
            if (g.evidence.grade != SphereGrade::Fails) {
                DesuspensionCheck d = desuspension_criterion(K, cap);
                g.inner = d.inner;
                g.verdict = GolodVerdict::MinimallyNonGolod;
                g.rule_id = "odd-sphere-wedge-refinement";
                g.justification =
                    "k-neighbourly sphere triangulation of dimension 2k+1, not the "
                    "boundary of a simplex: minimally non-Golod";
                g.conditional = g.evidence.grade == SphereGrade::HomologyLevel;
                if (g.conditional)
                    g.notes.push_back("sphere identification is homology-level only");
                if (g.inner && !g.inner->holds)
                    g.notes.push_back("inner concentration check failed; verdict kept "
                                      "from the dichotomy but flagged");
                return g;
            }
            g.verdict = GolodVerdict::Unknown;
            g.rule_id = "neighbourly-dichotomy";
            g.justification = "k-neighbourly (2k+1)-dimensional pseudomanifold: Golod "
                              "or minimally non-Golod, but sphere evidence failed so "
                              "the branch is undecided";
            return g;
        }
    }

    if (g.evidence.grade == SphereGrade::Verified ||
        g.evidence.grade == SphereGrade::HomologyLevel) {
        g.verdict = GolodVerdict::NotGolod;
        g.rule_id = "sphere-golod-dichotomy";
        g.justification = "a sphere triangulation other than the boundary of a "
                          "simplex is not Golod";
        g.conditional = g.evidence.grade == SphereGrade::HomologyLevel;
        if (g.conditional)
            g.notes.push_back("sphere identification is homology-level only");
        g.notes.push_back("minimal non-Golodness undecided: no implemented criterion");
        return g;
    }

    g.verdict = GolodVerdict::Unknown;
    g.rule_id = "";
    g.justification = "no implemented criterion applies";
    return g;
}

TorsionTransfer torsion_transfer_check(const SimplicialComplex& K, int cap) {
    facet_filtration(K);  // throws when the hypotheses fail
    TorsionTransfer t;
    t.full_torsion_free = mac_homology(K, cap).total.torsion_free();
    t.skeleton_torsion_free =
        mac_homology(skeleton(K, K.dim() - 1), cap).total.torsion_free();
    t.consistent = t.full_torsion_free == t.skeleton_torsion_free;
    return t;
}

}  // namespace polyprod
