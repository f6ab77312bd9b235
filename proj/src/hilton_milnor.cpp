#include "polyprod/hilton_milnor.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <stdexcept>

#include "polyprod/errors.hpp"

namespace polyprod {

namespace {

using BigInt = boost::multiprecision::cpp_int;

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

long long to_ll(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max())
        throw std::overflow_error("factor multiplicity exceeds 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

long long necklace_count(int k, int w) {
    if (k < 1 || w < 1) throw std::invalid_argument("necklace_count needs k, w >= 1");
    BigInt sum = 0;
    for (int d = 1; d <= w; ++d) {
        if (w % d != 0) continue;
        BigInt term = moebius(d);
        for (int i = 0; i < w / d; ++i) term *= k;
        sum += term;
    }
    return to_ll(sum / w);
}

HiltonMilnor hilton_milnor(const std::vector<int>& sphere_dims, int cutoff) {
    if (sphere_dims.empty()) throw std::invalid_argument("hilton_milnor needs generators");
    int max_dim = 0;
    for (int n : sphere_dims) {
        if (n < 2)
            throw std::invalid_argument("hilton_milnor needs sphere dimensions >= 2, got " +
                                        std::to_string(n));
        max_dim = std::max(max_dim, n);
    }
    if (cutoff < max_dim)
        throw HypothesisError(Hypothesis::CutoffTooLow,
                              "cutoff " + std::to_string(cutoff) +
                                  " below the largest generator dimension " +
                                  std::to_string(max_dim));

    HiltonMilnor out;
    out.generators = sphere_dims;
    out.cutoff = cutoff;

    // letter weights n_i - 1 >= 1; a factor from a length-w word has
    // dimension 1 + (weight sum) >= 1 + w
    std::map<int, long long> letters;  // weight -> letter count
    int min_u = cutoff;
    for (int n : sphere_dims) {
        ++letters[n - 1];
        min_u = std::min(min_u, n - 1);
    }
    const int tmax = cutoff - 1;  // largest admissible weight sum

    // W[a][t] = words of length a and weight t
    int wmax = tmax / min_u;
    std::vector<std::vector<BigInt>> W(static_cast<std::size_t>(wmax) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(tmax) + 1));
    W[0][0] = 1;
    for (int a = 1; a <= wmax; ++a)
        for (int t = a * min_u; t <= tmax; ++t)
            for (auto [u, cnt] : letters)
                if (t >= u) W[a][t] += cnt * W[a - 1][t - u];

    for (int w = 1; w <= wmax; ++w) {
        for (int t = w * min_u; t <= tmax; ++t) {
            BigInt aperiodic = 0;
            for (int d = 1; d <= w; ++d) {
                if (w % d != 0 || t % d != 0) continue;
                aperiodic += moebius(d) * W[w / d][t / d];
            }
            if (aperiodic == 0) continue;
            LoopFactor f;
            f.weight = w;
            f.sphere_dim = 1 + t;
            f.multiplicity = to_ll(aperiodic / w);
            out.factors.push_back(f);
        }
    }

    out.truncated = sphere_dims.size() >= 2;  // one generator has no brackets
    if (out.truncated)
        out.tail_note =
            "omitted factors of dimension > " + std::to_string(cutoff) +
            "; weight-w factors over k generators number (1/w) sum_{d|w} mu(d) k^{w/d}";
    return out;
}

}  // namespace polyprod
