#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyprod {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row major. Entries are arbitrary-precision so
// elimination never overflows.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const Int& x : a)
            if (x != 0) return false;
        return true;
    }
};

IntMat multiply(const IntMat& A, const IntMat& B);

struct SmithResult {
    int rank = 0;
    // nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive
    std::vector<Int> invariant_factors;
};

// Smith normal form by pivoting on a smallest-magnitude entry; the result
// satisfies the divisibility chain.
SmithResult smith_normal_form(IntMat A);

}  // namespace polyprod
