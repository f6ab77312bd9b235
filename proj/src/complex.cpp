#include "polyprod/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyprod {

namespace {

void check_m(int m) {
    if (m < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (m > kMaxVertices)
        throw std::invalid_argument("vertex count exceeds the 63-vertex cap");
}

// drop duplicates and non-maximal sets, sort lexicographically
std::vector<VertexSet> canonicalize(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return a.raw() < b.raw(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> maximal;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet t : sets) {
            if (t != s && s.subset_of(t)) { dominated = true; break; }
        }
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(), lex_less);
    return maximal;
}

// all subsets of `s` of given size, ascending raw order
void subsets_of_size(VertexSet s, int size, std::vector<VertexSet>& out) {
    std::vector<int> vs = s.vertices();
    int n = static_cast<int>(vs.size());
    if (size < 0 || size > n) return;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet sub;
        for (int i : idx) sub = sub.with(vs[i]);
        out.push_back(sub);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets) {
    std::vector<VertexSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("facet must be nonempty");
        VertexSet s;
        for (int v : f) {
            if (v < 1 || v > m) throw std::invalid_argument("facet vertex out of range");
            s = s.with(v);
        }
        sets.push_back(s);
    }
    return from_facet_sets(m, std::move(sets));
}

SimplicialComplex SimplicialComplex::from_facet_sets(int m, std::vector<VertexSet> facets) {
    check_m(m);
    for (VertexSet f : facets) {
        if (f.empty()) throw std::invalid_argument("facet must be nonempty");
        if (!f.subset_of(VertexSet::full(m)))
            throw std::invalid_argument("facet vertex out of range");
    }
    SimplicialComplex K;
    K.m_ = m;
    K.facets_ = canonicalize(std::move(facets));
    K.void_ = false;
    return K;
}

SimplicialComplex SimplicialComplex::empty_complex(int m) {
    check_m(m);
    SimplicialComplex K;
    K.m_ = m;
    return K;
}

SimplicialComplex SimplicialComplex::void_complex(int m) {
    check_m(m);
    SimplicialComplex K;
    K.m_ = m;
    K.void_ = true;
    return K;
}

int SimplicialComplex::dim() const {
    if (void_) return -2;
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (void_ || facets_.empty()) return true;
    int d = facets_.front().dim();
    for (VertexSet f : facets_)
        if (f.dim() != d) return false;
    return true;
}

bool SimplicialComplex::is_face(VertexSet s) const {
    if (void_) return false;
    if (s.empty()) return true;
    for (VertexSet f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<VertexSet> out;
    if (void_) return out;
    if (d == -1) {
        out.push_back(VertexSet());
        return out;
    }
    if (d < -1) return out;
    std::set<std::uint64_t> seen;
    for (VertexSet f : facets_) {
        std::vector<VertexSet> subs;
        subsets_of_size(f, d + 1, subs);
        for (VertexSet s : subs) seen.insert(s.raw());
    }
    out.reserve(seen.size());
    for (std::uint64_t r : seen) out.push_back(VertexSet(r));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    if (void_) return f;
    f.push_back(1);  // f_{-1}
    for (int d = 0; d <= dim(); ++d)
        f.push_back(static_cast<long long>(faces_of_dim(d).size()));
    return f;
}

long long SimplicialComplex::face_count() const {
    long long n = 0;
    for (long long fd : f_vector()) n += fd;
    return n;
}

VertexSet SimplicialComplex::vertex_support() const {
    VertexSet s;
    for (VertexSet f : facets_) s = s | f;
    return s;
}

VertexSet SimplicialComplex::ghost_vertices() const {
    return VertexSet::full(m_) - vertex_support();
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    auto f = f_vector();
    for (std::size_t i = 1; i < f.size(); ++i)
        chi += (i % 2 == 1 ? 1 : -1) * f[i];
    return chi;
}

std::string SimplicialComplex::to_text() const {
    std::string out = std::to_string(m_);
    if (void_) return out + ";void";
    for (VertexSet f : facets_) {
        out += ";";
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out += " ";
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int t) {
    if (K.is_void()) return K;
    if (t < -1) throw std::invalid_argument("skeleton dimension below -1");
    if (t == -1) return SimplicialComplex::empty_complex(K.vertex_count());
    std::vector<VertexSet> facets;
    for (VertexSet f : K.facets()) {
        if (f.dim() <= t) {
            facets.push_back(f);
        } else {
            subsets_of_size(f, t + 1, facets);
        }
    }
    return SimplicialComplex::from_facet_sets(K.vertex_count(), std::move(facets));
}

Subcomplex full_subcomplex(const SimplicialComplex& K, VertexSet I) {
    if (!I.subset_of(VertexSet::full(K.vertex_count())))
        throw std::invalid_argument("subset contains vertices outside [m]");
    Subcomplex out;
    out.vertex_map = I.vertices();
    out.original_support = I;
    if (K.is_void()) {
        out.complex = SimplicialComplex::void_complex(I.size());
        return out;
    }
    // re-index: original vertex out.vertex_map[j-1] becomes j
    std::vector<int> newindex(kMaxVertices + 1, 0);
    for (std::size_t j = 0; j < out.vertex_map.size(); ++j)
        newindex[out.vertex_map[j]] = static_cast<int>(j) + 1;
    std::vector<VertexSet> facets;
    for (VertexSet f : K.facets()) {
        VertexSet cut = f & I;
        if (cut.empty()) continue;
        VertexSet re;
        for (int v : cut.vertices()) re = re.with(newindex[v]);
        facets.push_back(re);
    }
    out.complex = SimplicialComplex::from_facet_sets(I.size(), std::move(facets));
    return out;
}

Subcomplex delete_vertex(const SimplicialComplex& K, int i) {
    if (i < 1 || i > K.vertex_count())
        throw std::invalid_argument("vertex out of range");
    return full_subcomplex(K, VertexSet::full(K.vertex_count()).without(i));
}

SimplicialComplex remove_face(const SimplicialComplex& K, VertexSet sigma) {
    if (!K.is_face(sigma)) throw std::invalid_argument("not a face");
    if (sigma.empty()) throw std::invalid_argument("cannot remove the empty simplex");
    bool maximal = false;
    for (VertexSet f : K.facets())
        if (f == sigma) { maximal = true; break; }
    if (!maximal) throw std::invalid_argument("face is not maximal");

    std::vector<VertexSet> facets;
    for (VertexSet f : K.facets())
        if (f != sigma) facets.push_back(f);
    // boundary faces of sigma stay behind
    for (int v : sigma.vertices()) {
        VertexSet b = sigma.without(v);
        if (!b.empty()) facets.push_back(b);
    }
    if (facets.empty()) return SimplicialComplex::empty_complex(K.vertex_count());
    return SimplicialComplex::from_facet_sets(K.vertex_count(), std::move(facets));
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& K) {
    std::vector<VertexSet> out;
    const int m = K.vertex_count();
    if (K.is_void()) return out;

    // level-by-level: candidates of size k are (faces of size k-1) + one vertex
    // whose every (k-1)-subset is a face; such a candidate is a face or a
    // minimal non-face.
    std::vector<VertexSet> level;  // faces of current size
    level.push_back(VertexSet());
    for (int k = 1; k <= m; ++k) {
        std::set<std::uint64_t> cand;
        for (VertexSet f : level) {
            for (int v = (k == 1 ? 1 : f.max_vertex() + 1); v <= m; ++v)
                cand.insert(f.with(v).raw());
        }
        std::vector<VertexSet> next;
        for (std::uint64_t r : cand) {
            VertexSet s(r);
            bool all_subfaces = true;
            for (int v : s.vertices()) {
                if (!K.is_face(s.without(v))) { all_subfaces = false; break; }
            }
            if (!all_subfaces) continue;
            if (K.is_face(s)) next.push_back(s);
            else out.push_back(s);
        }
        level = std::move(next);
        if (level.empty() && k >= 1) {
            // no faces of size k: any remaining minimal non-face of larger size
            // would need all its subsets to be faces; impossible beyond k
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    });
    return out;
}

Neighbourliness neighbourliness(const SimplicialComplex& K) {
    Neighbourliness res;
    res.ghost_vertices = !K.ghost_vertices().empty();
    auto mnf = minimal_non_faces(K);
    if (mnf.empty()) {
        // full simplex: every subset is a face
        res.k = std::max(0, K.vertex_count() - 1);
    } else {
        res.k = std::max(0, mnf.front().size() - 2);
    }
    if (res.ghost_vertices) res.k = 0;
    res.complete_one_skeleton = mnf.empty() || mnf.front().size() >= 3;
    if (res.ghost_vertices) res.complete_one_skeleton = false;
    return res;
}

}  // namespace polyprod
