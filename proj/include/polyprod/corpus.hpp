#pragma once

#include <string>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

/* Named example complexes.
 *
 *   simplex_boundary(n)         ∂Δ^n on n+1 vertices, a triangulated S^{n-1}
 *   polygon(m)                  boundary of the m-gon, m >= 3
 *   cross_polytope_boundary(n)  n pairs of antipodal vertices (i, i+n)
 *   octahedron                  alias for cross_polytope_boundary(3)
 *   cyclic_sphere(m, d)         boundary of the cyclic polytope C(m, d) by
 *                               Gale's evenness condition, a triangulated
 *                               S^{d-1}
 *   rp2_six                     the 6-vertex projective plane
 *   torus_seven                 the 7-vertex torus
 *
 * Unknown names or invalid parameters throw std::invalid_argument.
 */
SimplicialComplex corpus_generate(const std::string& name,
                                  const std::vector<long long>& params = {});

std::vector<std::string> corpus_names();

}  // namespace polyprod
