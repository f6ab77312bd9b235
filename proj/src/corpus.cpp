#include "polyprod/corpus.hpp"

#include <stdexcept>

namespace polyprod {

namespace {

void want_params(const std::string& name, const std::vector<long long>& params, std::size_t n) {
    if (params.size() != n)
        throw std::invalid_argument(name + " takes " + std::to_string(n) + " parameter(s)");
}

SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw std::invalid_argument("simplex_boundary needs n >= 1");
    if (n + 1 > kMaxVertices) throw std::invalid_argument("simplex_boundary too large");
    int m = n + 1;
    std::vector<VertexSet> facets;
    VertexSet all = VertexSet::full(m);
    for (int v = 1; v <= m; ++v) facets.push_back(all.without(v));
    return SimplicialComplex::from_facet_sets(m, std::move(facets));
}

SimplicialComplex polygon(int m) {
    if (m < 3) throw std::invalid_argument("polygon needs m >= 3");
    if (m > kMaxVertices) throw std::invalid_argument("polygon too large");
    std::vector<VertexSet> facets;
    for (int i = 1; i < m; ++i) facets.push_back(VertexSet::of({i, i + 1}));
    facets.push_back(VertexSet::of({m, 1}));
    return SimplicialComplex::from_facet_sets(m, std::move(facets));
}

SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 1) throw std::invalid_argument("cross_polytope_boundary needs n >= 1");
    if (2 * n > kMaxVertices) throw std::invalid_argument("cross_polytope_boundary too large");
    // antipodal pairs (i, i+n); facets pick one vertex from each pair
    std::vector<VertexSet> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet f;
        for (int i = 1; i <= n; ++i)
            f = f.with(((mask >> (i - 1)) & 1u) ? i + n : i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facet_sets(2 * n, std::move(facets));
}

SimplicialComplex cyclic_sphere(int m, int d) {
    if (d < 2) throw std::invalid_argument("cyclic_sphere needs d >= 2");
    if (d >= m) throw std::invalid_argument("cyclic_sphere needs m > d");
    if (m > kMaxVertices) throw std::invalid_argument("cyclic_sphere too large");
    // Gale evenness: a d-subset S of [m] is a facet iff for every pair
    // i < j outside S, the number of elements of S strictly between them
    // is even.
    std::vector<VertexSet> facets;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i + 1;
    while (true) {
        VertexSet S = VertexSet::of(idx);
        VertexSet rest = VertexSet::full(m) - S;
        auto outside = rest.vertices();
        bool ok = true;
        for (std::size_t a = 0; a < outside.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < outside.size() && ok; ++b) {
                int cnt = 0;
                for (int v = outside[a] + 1; v < outside[b]; ++v)
                    if (S.contains(v)) ++cnt;
                if (cnt % 2 != 0) ok = false;
            }
        }
        if (ok) facets.push_back(S);
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return SimplicialComplex::from_facet_sets(m, std::move(facets));
}

SimplicialComplex rp2_six() {
    return SimplicialComplex::from_facets(6, {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6},
    });
}

SimplicialComplex torus_seven() {
    auto add = [](int a, int k) { return (a - 1 + k) % 7 + 1; };
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= 7; ++i) {
        facets.push_back({i, add(i, 1), add(i, 3)});
        facets.push_back({i, add(i, 2), add(i, 3)});
    }
    return SimplicialComplex::from_facets(7, facets);
}

}  // namespace

SimplicialComplex corpus_generate(const std::string& name, const std::vector<long long>& params) {
    if (name == "simplex_boundary") {
        want_params(name, params, 1);
        return simplex_boundary(static_cast<int>(params[0]));
    }
    if (name == "polygon") {
        want_params(name, params, 1);
        return polygon(static_cast<int>(params[0]));
    }
    if (name == "cross_polytope_boundary") {
        want_params(name, params, 1);
        return cross_polytope_boundary(static_cast<int>(params[0]));
    }
    if (name == "octahedron") {
        want_params(name, params, 0);
        return cross_polytope_boundary(3);
    }
    if (name == "cyclic_sphere") {
        want_params(name, params, 2);
        return cyclic_sphere(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "rp2_six") {
        want_params(name, params, 0);
        return rp2_six();
    }
    if (name == "torus_seven") {
        want_params(name, params, 0);
        return torus_seven();
    }
    throw std::invalid_argument("unknown corpus name: " + name);
}

std::vector<std::string> corpus_names() {
    return {"simplex_boundary", "polygon", "cross_polytope_boundary", "octahedron",
            "cyclic_sphere", "rp2_six", "torus_seven"};
}

}  // namespace polyprod
