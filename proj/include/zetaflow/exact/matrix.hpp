#ifndef ZETAFLOW_EXACT_MATRIX_HPP
#define ZETAFLOW_EXACT_MATRIX_HPP

// Dense integer / rational matrices with exact arithmetic throughout.
// Everything at desk scale: no attempt at sparsity or blocking, correctness
// and determinism first.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

#include "zetaflow/errors.hpp"

namespace zetaflow::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Lowest terms, positive denominator.
inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // rows given top to bottom; all rows must have equal length
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;

    // A^m, m >= 0 (A^0 = identity, requires square)
    IntMatrix pow(int m) const;

    Int trace() const;

    std::vector<Int> column(int j) const;
    std::vector<Int> row(int i) const;

    // matrix-vector product
    std::vector<Int> apply(const std::vector<Int>& v) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static RatMatrix from(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;

    // exact inverse; throws SingularBaseChange if not invertible
    RatMatrix inverse() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Bareiss fraction-free determinant; det of the 0x0 matrix is 1.
Int det(const IntMatrix& a);
Rat det(const RatMatrix& a);

int rank(const IntMatrix& a);
int rank(const RatMatrix& a);

// Determinant of the change-of-basis matrix M with b_i = sum_j M_ij a_j,
// where a and b are lists of rational coordinate vectors spanning the same
// subspace. Throws SingularBaseChange when a is dependent or b leaves span(a).
Rat base_change_det(const std::vector<std::vector<Rat>>& a,
                    const std::vector<std::vector<Rat>>& b);

// Matrix of the k-th exterior power in the lexicographic basis of k-subsets;
// entry (S, T) is the minor with rows S, columns T. k > n raises BadDegree.
IntMatrix exterior_power(const IntMatrix& a, int k);

} // namespace zetaflow::exact

#endif
