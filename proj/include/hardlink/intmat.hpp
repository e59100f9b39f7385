#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace hardlink {

using Int = boost::multiprecision::cpp_int;

// Dense exact integer matrix, row-major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static IntMatrix identity(int n);
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

struct SnfResult {
    IntMatrix d;             // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix u, v;          // unimodular transforms with u*m*v = d
    std::vector<Int> diag;   // min(rows, cols) entries of d
    int rank = 0;            // number of nonzero diagonal entries
};

// Smith normal form with transforms. Pivots pick the smallest nonzero
// absolute value (ties by position). The reconstruction u*m*v is recomputed
// and compared entrywise before returning, and both transform determinants
// are tracked to +-1.
SnfResult snf(const IntMatrix& m);

struct CokernelInvariants {
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
    int free_rank = 0;         // rank of the free part of coker(m)
};

// Canonical presentation of Z^rows / m Z^cols.
CokernelInvariants invariant_factors(const IntMatrix& m);

}  // namespace hardlink
