#ifndef ZETAFLOW_REGDET_SPECTRAL_HPP
#define ZETAFLOW_REGDET_SPECTRAL_HPP

// Zeta-regularized determinants: det = exp(-zeta'(0)) with
// zeta(z) = sum lambda^(-z) over the nonzero spectrum, branch of the
// logarithm fixed by arg in (-pi, pi] (negative reals take +pi). Supported
// spectra: finite lists, the shifted flow lattice {2 pi i n / ell}, and
// symmetric families {+-i mu_k}. Infinite sums go through the Hurwitz zeta
// function evaluated by Euler-Maclaurin with explicit tail bounds.

#include <complex>
#include <vector>

#include "zetaflow/errors.hpp"

namespace zetaflow::regdet {

using Complex = std::complex<double>;

struct Spectrum {
    enum class Kind { finite, lattice, symmetric_pairs };
    Kind kind = Kind::finite;
    std::vector<Complex> values; // finite: nonzero, multiplicity by repetition
    double ell = 0;              // lattice: eigenvalues 2 pi i n / ell, all n
    std::vector<double> mu;      // symmetric_pairs: eigenvalues +-i mu_k, mu_k > 0

    static Spectrum finite(std::vector<Complex> values);
    static Spectrum lattice(double ell);
    static Spectrum symmetric_pairs(std::vector<double> mu);
};

struct NumericValue {
    Complex value;
    double error_bound = 0;
};

// principal-type log with the branch cut resolved upward: arg in (-pi, pi]
Complex branch_log(Complex lambda);

// d/dz zeta_H(z, a) at z = 0 for Re(a) > 0, Euler-Maclaurin with tail bound
NumericValue hurwitz_zeta_prime_zero(Complex a);

// zeta'(0) of the spectrum itself (lattice: zero mode excluded)
NumericValue spectral_zeta_prime_at_zero(const Spectrum& s);

// det of the spectrum shifted by `shift` (eigenvalues lambda + shift);
// ZeroEigenvalue when the shift lands on the spectrum. The lattice case
// requires Re(shift) > 0.
NumericValue regdet_value(const Spectrum& s, Complex shift);

struct ThetaDeltaCheck {
    NumericValue lhs; // zeta'(0) of the flow generator spectrum {+-i mu}
    NumericValue rhs; // half of zeta'(0) of the squared spectrum, doubled
    double tolerance = 0;
    bool within = false;
};

// the generator squares to the Laplacian on the orthogonal complement of
// the constants, so one zeta' determines the other
ThetaDeltaCheck check_theta_delta_identity(const std::vector<double>& mu,
                                           double tolerance = 1e-10);

// alternating count of zero modes: sum (-1)^(i+1) dims[i]
long long zeta_factorization_order(const std::vector<int>& zero_mode_dims);

} // namespace zetaflow::regdet

#endif
