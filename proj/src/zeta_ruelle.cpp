#include "zetaflow/zeta/ruelle.hpp"

#include <numeric>

namespace zetaflow::zeta {

ZetaRational zeta_det_form(const torus::GradedEndo& e) {
    IntPolynomial num = IntPolynomial::one();
    IntPolynomial den = IntPolynomial::one();
    for (int i = 0; i <= e.top_degree(); ++i) {
        const IntPolynomial f = exact::det_one_minus_t(e.action[i]);
        if (i % 2 == 1) num = num * f;
        else den = den * f;
    }
    IntPolynomial g = poly_gcd(num, den);
    if (g.coeff(0) < 0) g = -g; // constant term +1, so the quotients keep theirs
    num = num.div_exact(g);
    den = den.div_exact(g);
    return {num, den};
}

std::vector<Rat> taylor(const ZetaRational& z, int order) {
    if (order < 0) throw Error("negative series order");
    if (z.den.coeff(0) == 0) throw Error("denominator has no constant term");
    // invert the denominator as a power series, then multiply by num
    std::vector<Rat> inv(order + 1);
    const Rat d0(z.den.coeff(0));
    inv[0] = Rat(1) / d0;
    for (int m = 1; m <= order; ++m) {
        Rat acc = 0;
        for (int k = 1; k <= std::min(m, z.den.degree()); ++k)
            acc += Rat(z.den.coeff(k)) * inv[m - k];
        inv[m] = -acc / d0;
    }
    std::vector<Rat> out(order + 1);
    for (int m = 0; m <= order; ++m) {
        Rat acc = 0;
        for (int k = 0; k <= std::min(m, z.num.degree()); ++k)
            acc += Rat(z.num.coeff(k)) * inv[m - k];
        out[m] = acc;
    }
    return out;
}

std::vector<Rat> lefschetz_series(const torus::GradedEndo& e, int order) {
    if (order < 0) throw Error("negative series order");
    std::vector<Rat> lef(order + 1); // lef[m] = alternating trace of iterate m
    std::vector<IntMatrix> power;
    for (const IntMatrix& a : e.action) power.push_back(IntMatrix::identity(a.rows()));
    for (int m = 1; m <= order; ++m) {
        Int l = 0;
        for (int i = 0; i <= e.top_degree(); ++i) {
            power[i] = power[i] * e.action[i];
            const Int t = power[i].trace();
            l += (i % 2 == 0) ? t : -t;
        }
        lef[m] = Rat(l);
    }
    std::vector<Rat> exp_series(order + 1);
    exp_series[0] = 1;
    for (int m = 1; m <= order; ++m) {
        Rat acc = 0;
        for (int j = 1; j <= m; ++j) acc += lef[j] * exp_series[m - j];
        exp_series[m] = acc / Rat(m);
    }
    return exp_series;
}

OrbitCensus orbit_census(const IntMatrix& a, int max_period) {
    if (!a.is_square() || a.rows() == 0)
        throw ValidationError("orbit census needs a nonempty square matrix");
    if (max_period < 1) throw Error("census period must be at least 1");

    OrbitCensus c;
    c.max_period = max_period;
    const int n = a.rows();
    IntMatrix power = IntMatrix::identity(n);
    for (int m = 1; m <= max_period; ++m) {
        power = power * a;
        const Int d = exact::det(power - IntMatrix::identity(n));
        if (d == 0) throw DegenerateOrbits(m);
        const Int lef = (n % 2 == 0) ? d : -d; // det(1 - A^m) = (-1)^n det(A^m - 1)
        c.fixed.push_back(abs(d));
        c.lefschetz.push_back(lef);
        c.sign.push_back(lef > 0 ? 1 : -1);
    }

    // moebius function 1..max_period by sieve
    std::vector<int> mu(max_period + 1, 1);
    std::vector<bool> is_prime(max_period + 1, true);
    for (int p = 2; p <= max_period; ++p) {
        if (!is_prime[p]) continue;
        for (int k = p; k <= max_period; k += p) {
            if (k > p) is_prime[k] = false;
            mu[k] = -mu[k];
        }
        const long long p2 = static_cast<long long>(p) * p;
        for (long long k = p2; k <= max_period; k += p2) mu[k] = 0;
    }

    for (int m = 1; m <= max_period; ++m) {
        Int acc = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0 && mu[m / d] != 0)
                acc += Int(mu[m / d]) * c.fixed[d - 1];
        if (acc % m != 0)
            throw Error("fixed point counts fail the divisibility of orbit counting");
        c.primitive.push_back(acc / m);
    }
    return c;
}

std::vector<Rat> euler_product_series(const OrbitCensus& c, int order) {
    if (order < 0) throw Error("negative series order");
    if (order > c.max_period)
        throw Error("census too short for the requested order");

    for (int d = 1; d <= c.max_period; ++d) {
        if (c.primitive[d - 1] == 0) continue;
        for (int m = 2 * d; m <= c.max_period; m += d)
            if (c.sign[m - 1] != c.sign[d - 1])
                throw SignInstability("iterate sign flips between periods " +
                                      std::to_string(d) + " and " + std::to_string(m));
    }

    std::vector<Rat> acc(order + 1);
    acc[0] = 1;
    for (int m = 1; m <= order; ++m) {
        if (c.primitive[m - 1] == 0) continue;
        const Int e = -Int(c.sign[m - 1]) * c.primitive[m - 1];
        // multiply by (1 - t^m)^e via the binomial series
        const int kmax = order / m;
        std::vector<Rat> factor(order + 1);
        Rat binom = 1;
        factor[0] = 1;
        for (int k = 1; k <= kmax; ++k) {
            binom *= Rat(e - (k - 1)) / Rat(k);
            factor[k * m] = (k % 2 == 0) ? binom : -binom;
        }
        std::vector<Rat> next(order + 1);
        for (int i = 0; i <= order; ++i) {
            if (acc[i] == 0) continue;
            for (int j = 0; i + j <= order; j += m) {
                if (factor[j] == 0) continue;
                next[i + j] += acc[i] * factor[j];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

LeadingTerm order_and_leading(const ZetaRational& z) {
    const int a = exact::multiplicity_at_one(z.num);
    const int b = exact::multiplicity_at_one(z.den);
    const IntPolynomial lin({Int(1), Int(-1)});
    IntPolynomial num = z.num, den = z.den;
    for (int i = 0; i < a; ++i) num = num.div_exact(lin);
    for (int i = 0; i < b; ++i) den = den.div_exact(lin);
    // near s = 0: 1 - exp(-s ell) = s ell (1 + O(s)), so each stripped factor
    // contributes one power of s ell
    LeadingTerm lt;
    lt.order = a - b;
    lt.value = LogMonomial(Rat(num.eval(Int(1))) / Rat(den.eval(Int(1))), lt.order);
    return lt;
}

SpecialValueReport verify_special_value(const torus::GradedEndo& e) {
    SpecialValueReport r;
    const torus::SuspensionCohomology s = suspension_cohomology(e);
    const cdet::BasedComplex complex = psi_cup_complex(s);
    r.acyclic = cdet::is_acyclic(complex);
    r.zeta = zeta_det_form(e);

    const LeadingTerm lt = order_and_leading(r.zeta);
    r.ord_lhs = lt.order;
    r.ord_rhs = 0;
    for (int i = 0; i <= s.top_degree(); ++i) {
        const long long w = static_cast<long long>(i) * s.degrees[i].rank;
        r.ord_rhs += (i % 2 == 0) ? w : -w;
    }
    r.leading_abs = lt.value.abs_value();
    r.sign = lt.value.coeff() > 0 ? 1 : (lt.value.coeff() < 0 ? -1 : 0);

    if (r.acyclic) {
        r.ord_checked = true;
        r.ord_equal = (r.ord_lhs == r.ord_rhs);
        r.rhs = torus::special_value_rhs(s);
        r.leading_checked = true;
        r.leading_equal = (r.leading_abs == r.rhs);
    }
    return r;
}

} // namespace zetaflow::zeta
