#ifndef ZETAFLOW_CDET_BASED_COMPLEX_HPP
#define ZETAFLOW_CDET_BASED_COMPLEX_HPP

#include <random>
#include <string>
#include <vector>

#include "zetaflow/cdet/log_monomial.hpp"
#include "zetaflow/exact/matrix.hpp"

namespace zetaflow::cdet {

using exact::RatMatrix;

class LogMatrix {
public:
    LogMatrix() : rows_(0), cols_(0) {}
    LogMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static LogMatrix identity(int n);
    static LogMatrix from(const RatMatrix& m, long long ell_power = 0);
    // ell^power * m, entries integral
    static LogMatrix scaled(const exact::IntMatrix& m, long long ell_power);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    LogMonomial& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const LogMonomial& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const LogMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    LogMatrix operator*(const LogMatrix& o) const;
    bool is_zero() const;

    // image under ell := 1 (scalars become plain rationals)
    RatMatrix at_ell_one() const;

    std::vector<LogMonomial> column(int j) const;

private:
    int rows_, cols_;
    std::vector<LogMonomial> a_;
};

// Gaussian elimination over the monomial scalars; exact. Determinant of the
// 0x0 matrix is 1.
LogMonomial log_det(const LogMatrix& m);
int log_rank(const LogMatrix& m);
// left-to-right greedy pivot columns (the earliest independent columns)
std::vector<int> pivot_columns(const LogMatrix& m);

// A cochain complex of based finite-dimensional spaces over the monomial
// scalars. Differentials are stored in the coordinates of the chosen bases,
// so the bases themselves are implicit; optional labels name the coordinate
// vectors per degree.
class BasedComplex {
public:
    // diffs[i] maps degree i to degree i+1 and has shape dims[i+1] x dims[i].
    // Validates shapes and d(i+1) . d(i) = 0.
    BasedComplex(std::vector<int> dims, std::vector<LogMatrix> diffs,
                 std::vector<std::vector<std::string>> labels = {});

    int length() const { return static_cast<int>(dims_.size()); } // degrees 0..length-1
    int dim(int i) const { return dims_[i]; }
    const std::vector<int>& dims() const { return dims_; }
    // differential out of degree i; zero map of the right shape at the top
    const LogMatrix& diff(int i) const { return d_[i]; }
    const std::vector<std::string>& labels(int i) const { return labels_[i]; }

private:
    std::vector<int> dims_;
    std::vector<LogMatrix> d_;
    std::vector<std::vector<std::string>> labels_;
};

// exactness everywhere (ell := 1 is harmless: ell is a positive unit)
bool is_acyclic(const BasedComplex& c);

// Determinant of an acyclic based complex: choose image bases c and
// preimages c~, then multiply |[basis / (c, c~)]| over degrees with
// alternating exponents. The value does not depend on the choices; the
// deterministic version picks earliest pivot columns. Throws NotAcyclic.
LogMonomial complex_determinant(const BasedComplex& c);

// same value through random image mixes and preimage offsets
LogMonomial complex_determinant_randomized(const BasedComplex& c, std::mt19937_64& rng);

// Base-change law: new_bases[i] expresses the new basis vectors in the old
// coordinates (rows), and the determinant picks up |det new_bases[i]| with
// exponent (-1)^i. Throws SingularBaseChange on a singular base change.
LogMonomial determinant_base_change(const BasedComplex& c,
                                    const std::vector<RatMatrix>& new_bases);

// the same complex written in the new bases (for cross-checking the law)
BasedComplex rebased(const BasedComplex& c, const std::vector<RatMatrix>& new_bases);

} // namespace zetaflow::cdet

#endif
