#ifndef ZETAFLOW_TORUS_SUSPENSION_HPP
#define ZETAFLOW_TORUS_SUSPENSION_HPP

// Suspension of a graded integral endomorphism: the cohomology of the
// mapping torus splits degreewise into a cokernel part coming from one
// degree down and a fixed part, both cut out of (A_i - 1). The class psi
// dual to the flow direction pairs to ell against the base circle, and
// cup with psi shuffles the fixed part into the next cokernel part.

#include <vector>

#include "zetaflow/cdet/based_complex.hpp"
#include "zetaflow/cdet/torsion.hpp"
#include "zetaflow/exact/matrix.hpp"
#include "zetaflow/exact/smith.hpp"

namespace zetaflow::torus {

using cdet::LogMonomial;
using exact::Int;
using exact::IntMatrix;
using exact::Rat;

// The period ell of the shortest closed orbit, either log p for an integer
// p >= 2 or a plain positive length. Algebra treats ell formally; the tag
// only matters when a report renders numbers.
struct PeriodScale {
    enum class Kind { log_of_integer, plain_length };
    Kind kind = Kind::log_of_integer;
    long long p = 2;
    double length = 1.0;

    static PeriodScale log_integer(long long p);
    static PeriodScale plain(double length);
    double value() const;
};

// degreewise action on the cohomology of the fibre, degrees 0..n contiguous
struct GradedEndo {
    std::vector<IntMatrix> action;
    PeriodScale ell;
    int top_degree() const { return static_cast<int>(action.size()) - 1; }
};

// A_i = i-th exterior power of a unimodular A; throws NotUnimodular
GradedEndo torus_system(const IntMatrix& a, PeriodScale ell);

// explicit matrices; throws ValidationError on shape problems or empty input
GradedEndo graded_system(std::vector<IntMatrix> matrices, PeriodScale ell);

struct DegreeData {
    long long rank = 0;          // rank of the suspension cohomology here
    std::vector<Int> torsion;    // invariant factors > 1 of coker(A_{i-1} - 1)
    int coker_rank = 0;          // free rank of coker(A_{i-1} - 1)
    int ker_rank = 0;            // rank of ker(A_i - 1)
    IntMatrix ker_basis;         // columns: saturated basis of ker(A_i - 1)
    IntMatrix coker_lift;        // columns: integral lifts of free cokernel generators
    IntMatrix coker_projection;  // projection onto free cokernel coordinates
};

struct SuspensionCohomology {
    std::vector<DegreeData> degrees; // 0..n+1
    LogMonomial psi;                 // ell times the degree-1 cokernel generator
    PeriodScale ell;
    int top_degree() const { return static_cast<int>(degrees.size()) - 1; }
};

SuspensionCohomology suspension_cohomology(const GradedEndo& e);

// cup with psi in the split coordinates: the fixed part of degree i goes by
// ell * (include, then project to coker(A_i - 1)) into the cokernel part of
// degree i+1; cokernel parts map to zero
cdet::BasedComplex psi_cup_complex(const SuspensionCohomology& s);

// rank(A_i - 1) == rank((A_i - 1)^2) in every degree
bool check_semisimple_at_one(const GradedEndo& e);

// alternating product of torsion orders divided by the determinant of the
// psi-cup complex; positive by construction. Throws NotAcyclic.
LogMonomial special_value_rhs(const SuspensionCohomology& s);

struct PeriodGroup {
    int rank;              // 1: the suspension fibres over the circle
    LogMonomial generator; // ell
    PeriodScale ell;
};
PeriodGroup period_group(const GradedEndo& e);

// free rank and torsion per degree, cohomology of the suspension
cdet::HomologySummary cohomology_summary(const SuspensionCohomology& s);

// same for homology, computed from the transposed action (degreewise
// torsion here matches cohomology one degree up)
cdet::HomologySummary homology_summary(const GradedEndo& e);

} // namespace zetaflow::torus

#endif
