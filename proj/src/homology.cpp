#include "polyprod/homology.hpp"

#include "polyprod/pseudo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyprod {

std::vector<long long> normalize_torsion(std::vector<long long> coeffs) {
    // factor every coefficient, bucket exponents per prime, then rebuild the
    // chain: the k-th largest invariant factor takes the k-th largest
    // exponent of each prime
    std::map<long long, std::vector<int>> primes;
    for (long long c : coeffs) {
        if (c < 0) c = -c;
        if (c <= 1) continue;
        for (long long p = 2; p * p <= c; ++p) {
            if (c % p != 0) continue;
            int e = 0;
            while (c % p == 0) { c /= p; ++e; }
            primes[p].push_back(e);
        }
        if (c > 1) primes[c].push_back(1);
    }
    std::size_t len = 0;
    for (auto& [p, es] : primes) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        len = std::max(len, es.size());
    }
    std::vector<long long> chain(len, 1);
    for (auto& [p, es] : primes)
        for (std::size_t k = 0; k < es.size(); ++k) {
            long long pk = 1;
            for (int e = 0; e < es[k]; ++e) pk *= p;
            chain[k] *= pk;  // chain[0] is the largest factor
        }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

HomologyProfile HomologyProfile::sphere(int d) {
    HomologyProfile p;
    p.add_rank(d, 1);
    return p;
}

void HomologyProfile::set(int degree, GradedGroup g) {
    if (g.trivial()) groups_.erase(degree);
    else groups_[degree] = std::move(g);
}

void HomologyProfile::add_rank(int degree, long long r) {
    if (r == 0) return;
    groups_[degree].rank += r;
    if (groups_[degree].trivial()) groups_.erase(degree);
}

void HomologyProfile::add_torsion(int degree, const std::vector<long long>& coeffs) {
    auto& g = groups_[degree];
    std::vector<long long> merged = g.torsion;
    for (long long c : coeffs)
        if (c > 1) merged.push_back(c);
    g.torsion = normalize_torsion(std::move(merged));
    if (g.trivial()) groups_.erase(degree);
}

long long HomologyProfile::rank(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? 0 : it->second.rank;
}

const std::vector<long long>& HomologyProfile::torsion(int degree) const {
    static const std::vector<long long> none;
    auto it = groups_.find(degree);
    return it == groups_.end() ? none : it->second.torsion;
}

bool HomologyProfile::torsion_free() const {
    for (auto& [d, g] : groups_)
        if (!g.torsion.empty()) return false;
    return true;
}

std::vector<int> HomologyProfile::degrees() const {
    std::vector<int> out;
    out.reserve(groups_.size());
    for (auto& [d, g] : groups_) out.push_back(d);
    return out;
}

int HomologyProfile::min_degree() const {
    if (trivial()) throw std::logic_error("trivial profile has no degrees");
    return groups_.begin()->first;
}

int HomologyProfile::max_degree() const {
    if (trivial()) throw std::logic_error("trivial profile has no degrees");
    return groups_.rbegin()->first;
}

HomologyProfile HomologyProfile::shifted(int k) const {
    HomologyProfile out;
    for (auto& [d, g] : groups_) out.groups_[d + k] = g;
    return out;
}

HomologyProfile& HomologyProfile::direct_sum(const HomologyProfile& o) {
    for (auto& [d, g] : o.groups_) {
        add_rank(d, g.rank);
        add_torsion(d, g.torsion);
    }
    return *this;
}

std::string HomologyProfile::poincare() const {
    std::string out = "1";
    for (auto& [d, g] : groups_) {
        if (g.rank == 0) continue;
        if (d == 0) { out = std::to_string(g.rank + 1); continue; }
        out += " + ";
        if (g.rank != 1) out += std::to_string(g.rank) + "*";
        out += "t";
        if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
}

HomologyProfile tensor_reduced(const HomologyProfile& a, const HomologyProfile& b) {
    if (!a.torsion_free() && !b.torsion_free())
        throw HypothesisError(Hypothesis::TorsionKuenneth,
                              "Kuenneth with torsion in both factors is not implemented");
    HomologyProfile out;
    for (auto& [da, ga] : a.groups()) {
        for (auto& [db, gb] : b.groups()) {
            int d = da + db;
            out.add_rank(d, ga.rank * gb.rank);
            // free ⊗ torsion copies the torsion; Tor terms vanish since one
            // side is free
            std::vector<long long> tor;
            for (long long t : gb.torsion)
                for (long long i = 0; i < ga.rank; ++i) tor.push_back(t);
            for (long long t : ga.torsion)
                for (long long i = 0; i < gb.rank; ++i) tor.push_back(t);
            out.add_torsion(d, tor);
        }
    }
    return out;
}

HomologyProfile product_reduced(const HomologyProfile& a, const HomologyProfile& b) {
    HomologyProfile out = tensor_reduced(a, b);
    out.direct_sum(a);
    out.direct_sum(b);
    return out;
}

ChainComplexZ ChainComplexZ::of(const SimplicialComplex& K) {
    ChainComplexZ cc;
    if (K.is_void()) return cc;
    int n = K.dim();
    for (int d = -1; d <= n; ++d) cc.bases.push_back(K.faces_of_dim(d));

    // index of each face within its dimension
    std::map<std::uint64_t, int> index;
    for (auto& basis : cc.bases)
        for (std::size_t i = 0; i < basis.size(); ++i)
            index[basis[i].raw()] = static_cast<int>(i);

    for (int d = 0; d <= n; ++d) {
        const auto& lower = cc.bases[d];      // (d-1)-faces
        const auto& upper = cc.bases[d + 1];  // d-faces
        IntMat mat(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            auto vs = upper[c].vertices();  // ascending
            for (std::size_t j = 0; j < vs.size(); ++j) {
                VertexSet face = upper[c].without(vs[j]);
                int r = index.at(face.raw());
                mat.at(r, static_cast<int>(c)) = (j % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundary.push_back(std::move(mat));
    }

    for (std::size_t d = 0; d + 1 < cc.boundary.size(); ++d)
        if (!multiply(cc.boundary[d], cc.boundary[d + 1]).is_zero())
            throw std::logic_error("boundary of boundary is nonzero");
    return cc;
}

HomologyProfile reduced_homology(const SimplicialComplex& K) {
    HomologyProfile out;
    if (K.is_void()) return out;
    ChainComplexZ cc = ChainComplexZ::of(K);
    const int n = K.dim();

    std::vector<SmithResult> snf(cc.boundary.size());
    for (std::size_t d = 0; d < cc.boundary.size(); ++d)
        snf[d] = smith_normal_form(cc.boundary[d]);

    auto rank_of = [&](int d) -> int {  // rank of ∂_d, d in 0..n
        if (d < 0 || d > n) return 0;
        return snf[d].rank;
    };

    for (int d = -1; d <= n; ++d) {
        long long dim_cd = static_cast<long long>(cc.bases[d + 1].size());
        long long betti = dim_cd - rank_of(d) - rank_of(d + 1);
        out.add_rank(d, betti);
        if (d + 1 <= n) {
            std::vector<long long> tor;
            for (const Int& f : snf[d + 1].invariant_factors)
                if (f > 1) tor.push_back(static_cast<long long>(f));
            out.add_torsion(d, tor);
        }
    }
    return out;
}

SubcomplexTorsionScan torsion_free_all_full_subcomplexes(const SimplicialComplex& K,
                                                         bool only_complete_one_skeleton,
                                                         int cap) {
    const int m = K.vertex_count();
    if (m > cap)
        throw HypothesisError(Hypothesis::CapExceeded,
                              "subset enumeration over " + std::to_string(m) +
                                  " vertices exceeds cap " + std::to_string(cap));
    // neighbour masks for the complete-1-skeleton filter
    std::vector<std::uint64_t> nbr(m + 1, 0);
    for (VertexSet e : K.faces_of_dim(1)) {
        auto vs = e.vertices();
        nbr[vs[0]] |= std::uint64_t{1} << (vs[1] - 1);
        nbr[vs[1]] |= std::uint64_t{1} << (vs[0] - 1);
    }

    SubcomplexTorsionScan scan;
    // by size, then lexicographic, so the first witness is the smallest
    for (int s = 1; s <= m && !scan.witness; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i + 1;
        while (true) {
            VertexSet I = VertexSet::of(idx);
            bool check = true;
            if (only_complete_one_skeleton) {
                for (int v : idx)
                    if ((I.without(v).raw() & ~nbr[v]) != 0) { check = false; break; }
            }
            if (check) {
                ++scan.subsets_checked;
                if (!reduced_homology(full_subcomplex(K, I).complex).torsion_free()) {
                    scan.all_torsion_free = false;
                    scan.witness = I;
                    break;
                }
            }
            int i = s - 1;
            while (i >= 0 && idx[i] == m - s + i + 1) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return scan;
}

WedgeRecognition wedge_recognition(const HomologyProfile& p,
                                   bool cells_in_two_consecutive_dims,
                                   bool simply_connected_attested) {
    WedgeRecognition w;
    if (!simply_connected_attested) {
        w.reason = "simple connectivity not attested";
        return w;
    }
    if (!cells_in_two_consecutive_dims) {
        w.reason = "two-consecutive-dimensions attestation missing";
        return w;
    }
    if (!p.torsion_free()) {
        w.reason = "profile has torsion";
        return w;
    }
    if (p.trivial()) {
        w.recognized = true;  // a point
        return w;
    }
    if (p.min_degree() < 2) {
        w.reason = "rank below degree 2 contradicts simple connectivity";
        return w;
    }
    if (p.max_degree() - p.min_degree() > 1) {
        w.reason = "ranks spread over more than two consecutive degrees";
        return w;
    }
    for (auto& [d, g] : p.groups())
        if (g.rank > 0) w.spheres[d] = g.rank;
    w.recognized = true;
    return w;
}

namespace {

// link of v in a pure 2-complex, as a graph on the neighbour vertices
bool link_is_single_cycle(const SimplicialComplex& K, int v) {
    std::map<int, std::vector<int>> adj;
    for (VertexSet f : K.facets()) {
        if (!f.contains(v)) continue;
        auto rest = f.without(v).vertices();
        adj[rest[0]].push_back(rest[1]);
        adj[rest[1]].push_back(rest[0]);
    }
    if (adj.size() < 3) return false;
    for (auto& [w, nb] : adj)
        if (nb.size() != 2) return false;
    // connected?
    std::vector<int> stack{adj.begin()->first};
    std::map<int, bool> seen{{stack[0], true}};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) { seen[y] = true; stack.push_back(y); }
    }
    return seen.size() == adj.size();
}

}  // namespace

SurfaceClass surface_classify(const SimplicialComplex& K) {
    SurfaceClass s;
    PseudoClass c = classify(K);
    if (!c.pure || c.dimension != 2) {
        s.reason = "not pure of dimension 2";
        return s;
    }
    if (!c.weak_pm_with_boundary || !c.closed) {
        s.reason = "some edge does not lie in exactly two triangles";
        return s;
    }
    if (!c.dual_connected) {
        s.reason = "not connected";
        return s;
    }
    if (!K.ghost_vertices().empty()) {
        s.reason = "ghost vertices cannot occur in a surface triangulation";
        return s;
    }
    for (int v : K.vertex_support().vertices()) {
        if (!link_is_single_cycle(K, v)) {
            s.reason = "link of vertex " + std::to_string(v) + " is not a single cycle";
            return s;
        }
    }
    s.is_surface = true;

    // orientability: propagate orientations over the dual graph; facets are
    // sorted triples, the orientation induced on the edge opposite the j-th
    // vertex carries sign (-1)^j
    DualGraph d = dual_graph(K);
    std::vector<int> sign(d.nodes.size(), 0);
    s.orientable = true;
    for (std::size_t start = 0; start < d.nodes.size() && s.orientable; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::vector<int> stack{static_cast<int>(start)};
        while (!stack.empty() && s.orientable) {
            int f = stack.back();
            stack.pop_back();
            for (int g : d.graph.adj[f]) {
                VertexSet shared = d.nodes[f] & d.nodes[g];
                auto opp_sign = [&](int node) {
                    auto vs = d.nodes[node].vertices();
                    for (std::size_t j = 0; j < vs.size(); ++j)
                        if (!shared.contains(vs[j])) return (j % 2 == 0) ? 1 : -1;
                    return 0;
                };
                // coherent orientations induce opposite signs on the shared edge
                int need = -sign[f] * opp_sign(f) * opp_sign(g);
                if (sign[g] == 0) {
                    sign[g] = need;
                    stack.push_back(g);
                } else if (sign[g] != need) {
                    s.orientable = false;
                    break;
                }
            }
        }
    }

    s.euler = K.euler_characteristic();
    if (s.orientable) {
        s.genus = static_cast<int>((2 - s.euler) / 2);
        s.cross_caps = -1;
    } else {
        s.cross_caps = static_cast<int>(2 - s.euler);
        s.genus = -1;
    }
    return s;
}

}  // namespace polyprod
