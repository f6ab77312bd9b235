#pragma once

#include <string>
#include <vector>

namespace polyprod {

/* `multiplicity` loop factors Omega S^{sphere_dim} coming from basic
 * products on `weight` letters. */
struct LoopFactor {
    int sphere_dim = 0;
    int weight = 0;
    long long multiplicity = 0;
};

struct HiltonMilnor {
    std::vector<int> generators;  // input sphere dimensions
    int cutoff = 0;
    std::vector<LoopFactor> factors;  // ordered by (weight, sphere_dim)
    bool truncated = false;           // factors above the cutoff exist
    std::string tail_note;            // how to count what was omitted
};

/* Loop factors of Omega(S^{n_1} ∨ … ∨ S^{n_k}): one Omega S^{1 + Σ_j (n_{i_j} - 1)}
 * per Lyndon word i_1…i_w over [k], restricted to sphere_dim <= cutoff.
 * Multiplicities are counted by the weighted necklace formula
 *   L(w, t) = (1/w) Σ_{d | gcd(w,t)} μ(d) W(w/d, t/d),
 * W(a, b) = number of length-a words of total weight b over the letters with
 * weights n_i - 1.
 *
 * Throws std::invalid_argument when some n_i < 2 (the theorem needs simply
 * connected spheres), HypothesisError(CutoffTooLow) when cutoff < max n_i,
 * std::overflow_error when a multiplicity exceeds 64 bits. */
HiltonMilnor hilton_milnor(const std::vector<int>& sphere_dims, int cutoff);

// Lyndon words of length w over k letters
long long necklace_count(int k, int w);

}  // namespace polyprod
