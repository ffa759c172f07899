#include "zetaflow/torus/suspension.hpp"

#include <cmath>

namespace zetaflow::torus {

PeriodScale PeriodScale::log_integer(long long p) {
    if (p < 2) throw ValidationError("period base must be an integer >= 2");
    PeriodScale s;
    s.kind = Kind::log_of_integer;
    s.p = p;
    return s;
}

PeriodScale PeriodScale::plain(double length) {
    if (!(length > 0)) throw ValidationError("period length must be positive");
    PeriodScale s;
    s.kind = Kind::plain_length;
    s.length = length;
    return s;
}

double PeriodScale::value() const {
    return kind == Kind::log_of_integer ? std::log(static_cast<double>(p)) : length;
}

GradedEndo torus_system(const IntMatrix& a, PeriodScale ell) {
    if (!a.is_square() || a.rows() == 0)
        throw ValidationError("torus system needs a nonempty square matrix");
    const Int d = exact::det(a);
    if (d != 1 && d != -1)
        throw NotUnimodular("matrix determinant is " + d.str() + ", not a unit");
    GradedEndo e;
    e.ell = ell;
    const int n = a.rows();
    for (int k = 0; k <= n; ++k) e.action.push_back(exact::exterior_power(a, k));
    return e;
}

GradedEndo graded_system(std::vector<IntMatrix> matrices, PeriodScale ell) {
    if (matrices.empty()) throw ValidationError("graded system has no degrees");
    for (size_t i = 0; i < matrices.size(); ++i)
        if (!matrices[i].is_square())
            throw ValidationError("action in degree " + std::to_string(i) + " is not square");
    if (matrices[0].rows() == 0)
        throw ValidationError("degree zero must be nonzero");
    GradedEndo e;
    e.action = std::move(matrices);
    e.ell = ell;
    return e;
}

namespace {

IntMatrix columns_matrix(const std::vector<std::vector<Int>>& cols, int height) {
    IntMatrix m(height, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (static_cast<int>(cols[j].size()) != height) throw Error("column height mismatch");
        for (int i = 0; i < height; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix minus_identity(const IntMatrix& a) { return a - IntMatrix::identity(a.rows()); }

} // namespace

SuspensionCohomology suspension_cohomology(const GradedEndo& e) {
    const int n = e.top_degree();
    SuspensionCohomology s;
    s.ell = e.ell;
    s.psi = LogMonomial::ell();
    s.degrees.resize(n + 2);
    for (int i = 0; i <= n + 1; ++i) {
        DegreeData& d = s.degrees[i];
        if (i <= n) {
            const IntMatrix fix = minus_identity(e.action[i]);
            const auto basis = exact::kernel_basis(fix);
            d.ker_rank = static_cast<int>(basis.size());
            d.ker_basis = columns_matrix(basis, e.action[i].rows());
        }
        if (i >= 1) {
            const IntMatrix fix = minus_identity(e.action[i - 1]);
            exact::Cokernel c = exact::cokernel(fix);
            d.coker_rank = c.free_rank;
            d.torsion = std::move(c.torsion);
            d.coker_lift = columns_matrix(c.basis_lift, e.action[i - 1].rows());
            d.coker_projection = std::move(c.free_projection);
        }
        d.rank = d.coker_rank + d.ker_rank;
    }
    return s;
}

cdet::BasedComplex psi_cup_complex(const SuspensionCohomology& s) {
    const int len = s.top_degree() + 1;
    std::vector<int> dims(len);
    std::vector<std::vector<std::string>> labels(len);
    for (int i = 0; i < len; ++i) {
        const DegreeData& d = s.degrees[i];
        dims[i] = d.coker_rank + d.ker_rank;
        for (int j = 0; j < d.coker_rank; ++j)
            labels[i].push_back("c" + std::to_string(j));
        for (int j = 0; j < d.ker_rank; ++j)
            labels[i].push_back("k" + std::to_string(j));
    }
    std::vector<cdet::LogMatrix> diffs;
    for (int i = 0; i + 1 < len; ++i) {
        const DegreeData& from = s.degrees[i];
        const DegreeData& to = s.degrees[i + 1];
        cdet::LogMatrix d(dims[i + 1], dims[i]);
        if (from.ker_rank > 0 && to.coker_rank > 0) {
            // to.coker_projection projects modulo im(A_i - 1); composed with
            // the inclusion of ker(A_i - 1) this is the cup with psi, up to
            // the global factor ell
            const IntMatrix block = to.coker_projection * from.ker_basis;
            for (int r = 0; r < to.coker_rank; ++r)
                for (int c = 0; c < from.ker_rank; ++c)
                    d.at(r, from.coker_rank + c) = LogMonomial(Rat(block.at(r, c)), 1);
        }
        diffs.push_back(std::move(d));
    }
    return cdet::BasedComplex(std::move(dims), std::move(diffs), std::move(labels));
}

bool check_semisimple_at_one(const GradedEndo& e) {
    for (const IntMatrix& a : e.action) {
        const IntMatrix m = minus_identity(a);
        if (exact::rank(m) != exact::rank(m * m)) return false;
    }
    return true;
}

LogMonomial special_value_rhs(const SuspensionCohomology& s) {
    Rat torsion_product = 1;
    for (int i = 0; i <= s.top_degree(); ++i) {
        Rat t = 1;
        for (const Int& d : s.degrees[i].torsion) t *= Rat(d);
        torsion_product *= (i % 2 == 0) ? t : Rat(1) / t;
    }
    const LogMonomial det = cdet::complex_determinant(psi_cup_complex(s));
    return LogMonomial(torsion_product, 0) / det;
}

PeriodGroup period_group(const GradedEndo& e) {
    return PeriodGroup{1, LogMonomial::ell(), e.ell};
}

cdet::HomologySummary cohomology_summary(const SuspensionCohomology& s) {
    cdet::HomologySummary h;
    for (const DegreeData& d : s.degrees)
        h.push_back({d.rank, d.torsion});
    return h;
}

cdet::HomologySummary homology_summary(const GradedEndo& e) {
    const int n = e.top_degree();
    cdet::HomologySummary h(n + 2);
    for (int i = 0; i <= n + 1; ++i) {
        long long rank = 0;
        std::vector<Int> torsion;
        if (i <= n) {
            exact::Cokernel c = exact::cokernel(minus_identity(e.action[i].transpose()));
            rank += c.free_rank;
            torsion = std::move(c.torsion);
        }
        if (i >= 1)
            rank += static_cast<long long>(
                exact::kernel_basis(minus_identity(e.action[i - 1].transpose())).size());
        h[i] = {rank, std::move(torsion)};
    }
    return h;
}

} // namespace zetaflow::torus
