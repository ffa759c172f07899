#ifndef ZETAFLOW_CDET_TORSION_HPP
#define ZETAFLOW_CDET_TORSION_HPP

// Bookkeeping for torsion orders and basis ratios along the comparison of
// combinatorial and analytic torsion. All quantities are exact rationals.

#include <vector>

#include "zetaflow/cdet/log_monomial.hpp"

namespace zetaflow::cdet {

struct DegreeHomology {
    long long free_rank = 0;
    std::vector<Int> torsion; // invariant factors > 1, ascending
    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : torsion) t *= d;
        return t;
    }
};

// degree 0 first
using HomologySummary = std::vector<DegreeHomology>;

// product of |torsion| orders with exponent (-1)^degree
Rat torsion_from_homology(const HomologySummary& h);

// tau picks up |ratio_i|^((-1)^i) under a change of preferred bases
Rat tau_base_change(const Rat& tau, const std::vector<Rat>& ratios);

// a ratio of dual bases is the inverse of the ratio of the originals
Rat dual_ratio(const Rat& r);

} // namespace zetaflow::cdet

#endif
