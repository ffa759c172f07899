#include "zetaflow/exact/smith.hpp"

#include <cstdlib>

namespace zetaflow::exact {

namespace {

// Reduction state: b == left * a * right at all times, and the _inv members
// are exact inverses of their partners.
struct Work {
    IntMatrix b, left, left_inv, right, right_inv;

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < b.cols(); ++j) std::swap(b.at(i, j), b.at(k, j));
        for (int j = 0; j < left.cols(); ++j) std::swap(left.at(i, j), left.at(k, j));
        for (int r = 0; r < left_inv.rows(); ++r) std::swap(left_inv.at(r, i), left_inv.at(r, k));
    }
    void swap_cols(int i, int k) {
        if (i == k) return;
        for (int r = 0; r < b.rows(); ++r) std::swap(b.at(r, i), b.at(r, k));
        for (int r = 0; r < right.rows(); ++r) std::swap(right.at(r, i), right.at(r, k));
        for (int j = 0; j < right_inv.cols(); ++j) std::swap(right_inv.at(i, j), right_inv.at(k, j));
    }
    // row i += q * row k
    void add_row(int i, int k, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) += q * b.at(k, j);
        for (int j = 0; j < left.cols(); ++j) left.at(i, j) += q * left.at(k, j);
        for (int r = 0; r < left_inv.rows(); ++r) left_inv.at(r, k) -= q * left_inv.at(r, i);
    }
    // col j += q * col k
    void add_col(int j, int k, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < b.rows(); ++r) b.at(r, j) += q * b.at(r, k);
        for (int r = 0; r < right.rows(); ++r) right.at(r, j) += q * right.at(r, k);
        for (int c = 0; c < right_inv.cols(); ++c) right_inv.at(k, c) -= q * right_inv.at(j, c);
    }
    void negate_row(int i) {
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) = -b.at(i, j);
        for (int j = 0; j < left.cols(); ++j) left.at(i, j) = -left.at(i, j);
        for (int r = 0; r < left_inv.rows(); ++r) left_inv.at(r, i) = -left_inv.at(r, i);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    Work w{a, IntMatrix::identity(m), IntMatrix::identity(m),
           IntMatrix::identity(n), IntMatrix::identity(n)};
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero |entry| of the trailing submatrix as pivot
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = w.b.at(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || abs(v) < abs(w.b.at(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) { t = steps; break; } // trailing block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            const Int piv = w.b.at(t, t);
            bool shrunk = false;
            for (int i = t + 1; i < m && !shrunk; ++i) {
                const Int& v = w.b.at(i, t);
                if (v == 0) continue;
                w.add_row(i, t, -(v / piv)); // truncated quotient, |rem| < |piv|
                if (w.b.at(i, t) != 0) shrunk = true;
            }
            if (shrunk) continue; // a smaller pivot appeared
            for (int j = t + 1; j < n && !shrunk; ++j) {
                const Int& v = w.b.at(t, j);
                if (v == 0) continue;
                w.add_col(j, t, -(v / piv));
                if (w.b.at(t, j) != 0) shrunk = true;
            }
            if (shrunk) continue;

            // pivot now alone in its row and column; pull in any entry the
            // pivot does not divide, so invariant factors chain up
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (w.b.at(i, j) % piv != 0) {
                        w.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t >= steps) break;
        if (w.b.at(t, t) < 0) w.negate_row(t);
    }

    SmithForm out;
    out.left = std::move(w.left);
    out.left_inv = std::move(w.left_inv);
    out.right = std::move(w.right);
    out.right_inv = std::move(w.right_inv);
    out.diag.resize(steps);
    for (int t = 0; t < steps; ++t) out.diag[t] = w.b.at(t, t);
    return out;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    int r = 0;
    while (r < static_cast<int>(s.diag.size()) && s.diag[r] != 0) ++r;
    std::vector<std::vector<Int>> basis;
    for (int k = r; k < a.cols(); ++k) basis.push_back(s.right.column(k));
    return basis;
}

Cokernel cokernel(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    const int m = a.rows();
    int r = 0;
    while (r < static_cast<int>(s.diag.size()) && s.diag[r] != 0) ++r;

    Cokernel c;
    c.free_rank = m - r;
    for (int k = 0; k < r; ++k)
        if (s.diag[k] > 1) c.torsion.push_back(s.diag[k]);
    c.free_projection = IntMatrix(c.free_rank, m);
    for (int k = r; k < m; ++k) {
        c.basis_lift.push_back(s.left_inv.column(k));
        for (int j = 0; j < m; ++j) c.free_projection.at(k - r, j) = s.left.at(k, j);
    }
    return c;
}

} // namespace zetaflow::exact
