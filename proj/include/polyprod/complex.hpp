#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprod/vertex_set.hpp"

namespace polyprod {

/* Abstract simplicial complex on the vertex set [m] = {1..m}, held as its
 * list of facets (inclusion-maximal faces). Canonical form: facets are
 * pairwise incomparable, each nonempty, sorted lexicographically by vertex
 * sequence. Vertices of [m] lying in no facet are ghost vertices; they are
 * retained because polyhedral products see them.
 *
 * Two degenerate complexes are distinguished:
 *   - the empty complex {∅}: no facets, but the empty simplex is a face
 *     (geometric realization is the empty space);
 *   - the void complex: no faces at all. It only arises as the boundary of
 *     a closed weak pseudomanifold.
 */
class SimplicialComplex {
public:
    // Canonicalizes: drops duplicates and faces contained in other faces.
    // An empty facet list yields the empty complex {∅}.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_facet_sets(int m, std::vector<VertexSet> facets);
    static SimplicialComplex empty_complex(int m);
    static SimplicialComplex void_complex(int m);

    int vertex_count() const { return m_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return void_; }

    // -1 for {∅}, -2 for the void complex
    int dim() const;
    bool is_pure() const;

    bool is_face(VertexSet s) const;
    // faces of dimension exactly d, lexicographically sorted; d = -1 gives
    // the empty simplex unless the complex is void
    std::vector<VertexSet> faces_of_dim(int d) const;
    // f[d+1] = number of d-faces, starting at f[-1 + 1] = f_{-1}
    std::vector<long long> f_vector() const;
    long long face_count() const;  // includes the empty simplex

    VertexSet vertex_support() const;
    VertexSet ghost_vertices() const;

    // classical Euler characteristic (no empty simplex term)
    long long euler_characteristic() const;

    std::string to_text() const;  // canonical "m; facet; facet; ..." digest

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.void_ == b.void_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex() = default;
    int m_ = 0;
    std::vector<VertexSet> facets_;
    bool void_ = false;
};

struct Subcomplex {
    SimplicialComplex complex = SimplicialComplex::empty_complex(0);
    // vertex_map[i-1] = original label of new vertex i (order preserving)
    std::vector<int> vertex_map;
    VertexSet original_support;  // the I the subcomplex was taken on
};

// t-skeleton: all faces of dimension <= t. skeleton(K, t) for t >= dim K is K.
SimplicialComplex skeleton(const SimplicialComplex& K, int t);

// Full subcomplex K_I = { σ ∈ K : σ ⊆ I }, re-indexed onto {1..|I|}.
// I = ∅ gives the empty complex on 0 vertices.
Subcomplex full_subcomplex(const SimplicialComplex& K, VertexSet I);

// K \ i = full subcomplex on [m] minus {i}
Subcomplex delete_vertex(const SimplicialComplex& K, int i);

// K \ σ: all faces except the maximal face σ. Throws std::invalid_argument
// when σ is not a face or not maximal. The ambient vertex count is kept.
SimplicialComplex remove_face(const SimplicialComplex& K, VertexSet sigma);

// Inclusion-minimal non-faces, sorted by (size, lex). Ghost vertices appear
// as singleton minimal non-faces.
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& K);

struct Neighbourliness {
    int k = 0;                        // largest k: every (k+1)-subset of [m] is a face
    bool ghost_vertices = false;      // if set, k was clamped to 0
    bool complete_one_skeleton = false;
};

Neighbourliness neighbourliness(const SimplicialComplex& K);

}  // namespace polyprod
