#include "hardlink/intmat.hpp"

#include <stdexcept>

namespace hardlink {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += xv * y.at(k, j);
        }
    return out;
}

namespace {

struct Worker {
    IntMatrix d, u, v;
    int det_u = 1, det_v = 1;

    // Row ops on d mirror on u (left transform); column ops mirror on v.
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        det_u = -det_u;
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        det_v = -det_v;
    }
    void add_row(int dst, int src, const Int& k) {
        for (int c = 0; c < d.cols; ++c) d.at(dst, c) += k * d.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += k * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& k) {
        for (int r = 0; r < d.rows; ++r) d.at(r, dst) += k * d.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += k * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        det_u = -det_u;
    }
};

// Quotient rounded to nearest, so |a - q*b| <= |b|/2; keeps pivots halving
// and entry growth polynomial.
Int divide_rounded(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    Worker w;
    w.d = m;
    w.u = IntMatrix::identity(m.rows);
    w.v = IntMatrix::identity(m.cols);
    int nmin = std::min(m.rows, m.cols);

    for (int s = 0; s < nmin; ++s) {
        bool exhausted = false;
        while (true) {
            // Pivot: smallest nonzero absolute value in the trailing block,
            // ties by position.
            int pr = -1, pc = -1;
            Int best;
            for (int r = s; r < m.rows; ++r)
                for (int c = s; c < m.cols; ++c) {
                    const Int& x = w.d.at(r, c);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pr < 0 || ax < best) {
                        best = ax;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) {
                exhausted = true;
                break;
            }
            w.swap_rows(s, pr);
            w.swap_cols(s, pc);

            // One reduction sweep; leftover remainders become strictly
            // smaller pivot candidates next round.
            bool remainder = false;
            for (int r = s + 1; r < m.rows; ++r) {
                if (w.d.at(r, s) == 0) continue;
                w.add_row(r, s, -divide_rounded(w.d.at(r, s), w.d.at(s, s)));
                if (w.d.at(r, s) != 0) remainder = true;
            }
            for (int c = s + 1; c < m.cols; ++c) {
                if (w.d.at(s, c) == 0) continue;
                w.add_col(c, s, -divide_rounded(w.d.at(s, c), w.d.at(s, s)));
                if (w.d.at(s, c) != 0) remainder = true;
            }
            if (remainder) continue;

            // Row and column are clear; fold in one non-divisible entry and
            // re-reduce, or finish the stage.
            bool fold = false;
            for (int r = s + 1; r < m.rows && !fold; ++r)
                for (int c = s + 1; c < m.cols && !fold; ++c)
                    if (w.d.at(r, c) % w.d.at(s, s) != 0) {
                        w.add_row(s, r, 1);
                        fold = true;
                    }
            if (!fold) break;
        }
        if (exhausted) break;
        if (w.d.at(s, s) < 0) w.negate_row(s);
    }

    SnfResult res;
    res.d = w.d;
    res.u = w.u;
    res.v = w.v;
    for (int i = 0; i < nmin; ++i) {
        res.diag.push_back(w.d.at(i, i));
        if (w.d.at(i, i) != 0) ++res.rank;
    }

    // Verify the form before handing it out.
    for (int i = 0; i + 1 < nmin; ++i) {
        const Int& a = res.diag[i];
        const Int& b = res.diag[i + 1];
        if (a < 0 || (a == 0 && b != 0) || (a != 0 && b % a != 0))
            throw std::logic_error("smith form divisibility chain broken");
    }
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (r != c && w.d.at(r, c) != 0)
                throw std::logic_error("smith form has off-diagonal residue");
    if (w.det_u != 1 && w.det_u != -1) throw std::logic_error("left transform not unimodular");
    if (w.det_v != 1 && w.det_v != -1) throw std::logic_error("right transform not unimodular");
    if (!(multiply(multiply(res.u, m), res.v) == res.d))
        throw std::logic_error("smith form reconstruction mismatch");
    return res;
}

CokernelInvariants invariant_factors(const IntMatrix& m) {
    SnfResult res = snf(m);
    CokernelInvariants inv;
    for (const Int& d : res.diag)
        if (d > 1) inv.torsion.push_back(d);
    inv.free_rank = m.rows - res.rank;
    return inv;
}

}  // namespace hardlink
