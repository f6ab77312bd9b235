#include "polyprod/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace polyprod {

IntMat multiply(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& x = A.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Int& y = B.at(k, j);
                if (y != 0) C.at(i, j) += x * y;
            }
        }
    return C;
}

namespace {

void swap_rows(IntMat& A, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < A.cols; ++j) std::swap(A.at(r1, j), A.at(r2, j));
}

void swap_cols(IntMat& A, int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, c1), A.at(i, c2));
}

// row[r2] -= q * row[r1], columns >= from
void row_axpy(IntMat& A, int r2, int r1, const Int& q, int from) {
    if (q == 0) return;
    for (int j = from; j < A.cols; ++j) A.at(r2, j) -= q * A.at(r1, j);
}

void col_axpy(IntMat& A, int c2, int c1, const Int& q, int from) {
    if (q == 0) return;
    for (int i = from; i < A.rows; ++i) A.at(i, c2) -= q * A.at(i, c1);
}

}  // namespace

SmithResult smith_normal_form(IntMat A) {
    SmithResult res;
    int t = 0;  // current pivot index
    const int bound = std::min(A.rows, A.cols);

    while (t < bound) {
        // find smallest nonzero entry in the trailing submatrix
        int pr = -1, pc = -1;
        for (int i = t; i < A.rows; ++i)
            for (int j = t; j < A.cols; ++j) {
                const Int& x = A.at(i, j);
                if (x == 0) continue;
                if (pr < 0 || abs(x) < abs(A.at(pr, pc))) { pr = i; pc = j; }
            }
        if (pr < 0) break;  // trailing submatrix is zero
        swap_rows(A, t, pr);
        swap_cols(A, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear the pivot column
            for (int i = t + 1; i < A.rows; ++i) {
                if (A.at(i, t) == 0) continue;
                Int q = A.at(i, t) / A.at(t, t);
                row_axpy(A, i, t, q, t);
                if (A.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    swap_rows(A, t, i);
                    clean = false;
                }
            }
            // clear the pivot row
            for (int j = t + 1; j < A.cols; ++j) {
                if (A.at(t, j) == 0) continue;
                Int q = A.at(t, j) / A.at(t, t);
                col_axpy(A, j, t, q, t);
                if (A.at(t, j) != 0) {
                    swap_cols(A, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every trailing entry for the divisibility
            // chain; if not, fold the offending row in and restart
            for (int i = t + 1; i < A.rows && clean; ++i)
                for (int j = t + 1; j < A.cols && clean; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        for (int c = t; c < A.cols; ++c) A.at(t, c) += A.at(i, c);
                        clean = false;
                    }
        }
        if (A.at(t, t) < 0) A.at(t, t) = -A.at(t, t);
        res.invariant_factors.push_back(A.at(t, t));
        ++t;
    }
    res.rank = t;
    return res;
}

}  // namespace polyprod
