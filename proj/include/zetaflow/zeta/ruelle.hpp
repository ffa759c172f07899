#ifndef ZETAFLOW_ZETA_RUELLE_HPP
#define ZETAFLOW_ZETA_RUELLE_HPP

// The zeta function of the suspension flow as a rational function of
// t = exp(-s * ell): an alternating product of det(1 - t A_i). Orbit data
// enters through fixed point counts of the iterates; the Euler product over
// closed orbits is only emitted when the per-iterate signs are stable.

#include <vector>

#include "zetaflow/cdet/log_monomial.hpp"
#include "zetaflow/exact/poly.hpp"
#include "zetaflow/torus/suspension.hpp"

namespace zetaflow::zeta {

using cdet::LogMonomial;
using exact::Int;
using exact::IntMatrix;
using exact::IntPolynomial;
using exact::Rat;

// reduced over Q[t], both constant terms 1
struct ZetaRational {
    IntPolynomial num, den;
};

ZetaRational zeta_det_form(const torus::GradedEndo& e);

// Taylor coefficients 0..order of num/den
std::vector<Rat> taylor(const ZetaRational& z, int order);

// exp(sum_m L_m t^m / m) with L_m the alternating trace of the m-th iterate
std::vector<Rat> lefschetz_series(const torus::GradedEndo& e, int order);

struct OrbitCensus {
    int max_period = 0;
    std::vector<Int> fixed;     // fixed[m-1] = #Fix(phi^m) = |det(A^m - 1)|
    std::vector<Int> lefschetz; // det(1 - A^m), signed
    std::vector<Int> primitive; // orbits of primitive period m
    std::vector<int> sign;      // sgn det(1 - A^m)
};

// counts for the m-torus automorphism given by a (need not be invertible);
// throws DegenerateOrbits(m) when det(A^m - 1) = 0
OrbitCensus orbit_census(const IntMatrix& a, int max_period);

// prod_m (1 - t^m)^(-sign_m * primitive_m) to the given order; requires
// order <= max_period and sign stability along iterates (SignInstability)
std::vector<Rat> euler_product_series(const OrbitCensus& c, int order);

struct LeadingTerm {
    long long order = 0;   // order of vanishing at s = 0
    LogMonomial value;     // leading coefficient, a rational times ell^order
};

LeadingTerm order_and_leading(const ZetaRational& z);

// One verification of the special-value identities for a system: exactness
// of the psi-cup complex, the vanishing order against the weighted rank sum,
// and the leading value against torsion / determinant (up to sign, which is
// reported separately).
struct SpecialValueReport {
    bool acyclic = false;
    long long ord_lhs = 0, ord_rhs = 0;
    bool ord_checked = false, ord_equal = false;
    LogMonomial leading_abs;  // |leading value| of zeta at s = 0
    LogMonomial rhs;          // torsion / determinant, when acyclic
    int sign = 0;             // sign of the leading value
    bool leading_checked = false, leading_equal = false;
    ZetaRational zeta;
};

SpecialValueReport verify_special_value(const torus::GradedEndo& e);

} // namespace zetaflow::zeta

#endif
