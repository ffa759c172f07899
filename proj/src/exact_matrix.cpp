#include "zetaflow/exact/matrix.hpp"

#include <sstream>

namespace zetaflow::exact {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Int> row;
        row.reserve(r.size());
        for (long long v : r) row.emplace_back(v);
        conv.push_back(std::move(row));
    }
    return from_rows(conv);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch in sum");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch in difference");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::pow(int m) const {
    if (!is_square()) throw Error("pow of non-square matrix");
    if (m < 0) throw Error("negative matrix power");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (m > 0) {
        if (m & 1) acc = acc * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return acc;
}

Int IntMatrix::trace() const {
    if (!is_square()) throw Error("trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("dimension mismatch in apply");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

RatMatrix RatMatrix::from(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("dimension mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw SingularBaseChange("inverse of non-square matrix");
    const int n = rows_;
    RatMatrix w = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) { p = i; break; }
        if (p < 0) throw SingularBaseChange("matrix not invertible");
        for (int j = 0; j < n; ++j) {
            std::swap(w.at(col, j), w.at(p, j));
            std::swap(inv.at(col, j), inv.at(p, j));
        }
        const Rat piv = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Int det(const IntMatrix& a) {
    if (!a.is_square()) throw Error("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev; // exact by Bareiss
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

Rat det(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    RatMatrix w = a;
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != col) {
            for (int j = col; j < n; ++j) std::swap(w.at(col, j), w.at(p, j));
            d = -d;
        }
        const Rat piv = w.at(col, col);
        d *= piv;
        for (int i = col + 1; i < n; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col) / piv;
            for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

int rank(const RatMatrix& a) {
    RatMatrix w = a;
    const int m = w.rows(), n = w.cols();
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (w.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = col; j < n; ++j) std::swap(w.at(r, j), w.at(p, j));
        const Rat piv = w.at(r, col);
        for (int i = r + 1; i < m; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col) / piv;
            for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

int rank(const IntMatrix& a) { return rank(RatMatrix::from(a)); }

Rat base_change_det(const std::vector<std::vector<Rat>>& a,
                    const std::vector<std::vector<Rat>>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n)
        throw SingularBaseChange("basis lists of different length");
    if (n == 0) return 1;
    const int d = static_cast<int>(a[0].size());
    for (const auto& v : a)
        if (static_cast<int>(v.size()) != d) throw Error("ragged basis list");
    for (const auto& v : b)
        if (static_cast<int>(v.size()) != d) throw Error("ragged basis list");

    // Solve M A = B row by row: A^T x = b_i^T. Eliminate on A^T once, keep
    // the transforms, then back-substitute each right-hand side.
    RatMatrix at(d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) at.at(j, i) = a[i][j];

    RatMatrix rhs(d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) rhs.at(j, i) = b[i][j];

    std::vector<int> pivot_row(n, -1);
    int r = 0;
    for (int col = 0; col < n && r < d; ++col) {
        int p = -1;
        for (int i = r; i < d; ++i)
            if (at.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < n; ++j) {
            std::swap(at.at(r, j), at.at(p, j));
            std::swap(rhs.at(r, j), rhs.at(p, j));
        }
        const Rat piv = at.at(r, col);
        for (int i = 0; i < d; ++i) {
            if (i == r || at.at(i, col) == 0) continue;
            const Rat f = at.at(i, col) / piv;
            for (int j = 0; j < n; ++j) {
                at.at(i, j) -= f * at.at(r, j);
                rhs.at(i, j) -= f * rhs.at(r, j);
            }
        }
        pivot_row[col] = r;
        ++r;
    }
    if (r < n) throw SingularBaseChange("first basis list is linearly dependent");

    // rows r..d-1 of the eliminated system must vanish on every rhs
    for (int i = r; i < d; ++i)
        for (int j = 0; j < n; ++j)
            if (rhs.at(i, j) != 0)
                throw SingularBaseChange("second list leaves the span of the first");

    RatMatrix m(n, n);
    for (int col = 0; col < n; ++col) {
        const int pr = pivot_row[col];
        for (int j = 0; j < n; ++j) m.at(j, col) = rhs.at(pr, j) / at.at(pr, col);
    }
    const Rat dm = det(m);
    if (dm == 0) throw SingularBaseChange("change of basis is singular");
    return dm;
}

namespace {

// lexicographically ordered k-subsets of {0..n-1}
std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) { out.push_back({}); return out; }
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

IntMatrix exterior_power(const IntMatrix& a, int k) {
    if (!a.is_square()) throw Error("exterior power of non-square matrix");
    const int n = a.rows();
    if (k < 0 || k > n) throw BadDegree("exterior power degree out of range");
    const auto subs = subsets_lex(n, k);
    const int m = static_cast<int>(subs.size());
    IntMatrix r(m, m);
    for (int si = 0; si < m; ++si)
        for (int tj = 0; tj < m; ++tj) {
            IntMatrix minor(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor.at(i, j) = a.at(subs[si][i], subs[tj][j]);
            r.at(si, tj) = det(minor);
        }
    return r;
}

} // namespace zetaflow::exact
