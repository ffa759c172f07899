#ifndef ZETAFLOW_EXACT_SMITH_HPP
#define ZETAFLOW_EXACT_SMITH_HPP

#include <vector>

#include "zetaflow/exact/matrix.hpp"

namespace zetaflow::exact {

// left * A * right = diag(d_1..d_r) padded with zeros, d_k >= 0, d_k | d_{k+1},
// both transforms unimodular. left_inv and right_inv are the exact inverses,
// kept up to date during the reduction (cheaper than inverting afterwards).
struct SmithForm {
    IntMatrix left, left_inv;
    IntMatrix right, right_inv;
    std::vector<Int> diag; // length min(rows, cols)
};

// Smallest surviving |entry| as pivot at every step; keeps growth tame.
SmithForm smith_normal_form(const IntMatrix& a);

// Basis of the saturated kernel lattice ker(A) in Z^cols: columns of the
// right transform past the rank. Saturated because the transform is
// unimodular, so the basis extends to a basis of Z^cols.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

// Z^rows / im(A), described by invariant factors and an integral section of
// the free quotient. free_projection * basis_lift = identity, and
// free_projection kills im(A) modulo torsion.
struct Cokernel {
    int free_rank = 0;
    std::vector<Int> torsion;                  // invariant factors > 1, ascending
    std::vector<std::vector<Int>> basis_lift;  // free_rank vectors in Z^rows
    IntMatrix free_projection;                 // free_rank x rows
    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : torsion) t *= d;
        return t;
    }
};

Cokernel cokernel(const IntMatrix& a);

} // namespace zetaflow::exact

#endif
