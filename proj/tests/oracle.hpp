#pragma once

// Independent reference computations for the test suite. Everything here
// recomputes from first principles: homology ranks by rational Gaussian
// elimination instead of Smith normal form, subset sums by direct
// enumeration, Lyndon words by explicit generation.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod::oracle {

// reduced Betti numbers over Q; index d+1 holds b_d, starting at b_{-1}
std::vector<long long> rational_bettis(const SimplicialComplex& K);

// degree -> rank of the Hochster-style subset sum, recomputed from scratch.
// shift is |I|+1, or 1 when real_shift; skip_full omits I = [m].
std::map<int, long long> subset_sum_ranks(const SimplicialComplex& K, bool real_shift,
                                          bool skip_full);

// Lyndon words over letters of the given weights, counted by
// (length, total weight), keeping total weight <= max_weight
std::map<std::pair<int, int>, long long> lyndon_counts(
    const std::vector<int>& letter_weights, int max_weight);

// seeded random complex: `tries` random faces of size <= fmax on [m]
SimplicialComplex random_complex(std::uint64_t seed, int m, int tries, int fmax);

}  // namespace polyprod::oracle
