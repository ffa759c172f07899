#include "zetaflow/cdet/based_complex.hpp"

#include <algorithm>

namespace zetaflow::cdet {

LogMatrix LogMatrix::identity(int n) {
    LogMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LogMonomial::one();
    return m;
}

LogMatrix LogMatrix::from(const RatMatrix& src, long long ell_power) {
    LogMatrix m(src.rows(), src.cols());
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            m.at(i, j) = LogMonomial(src.at(i, j), ell_power);
    return m;
}

LogMatrix LogMatrix::scaled(const exact::IntMatrix& src, long long ell_power) {
    LogMatrix m(src.rows(), src.cols());
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            m.at(i, j) = LogMonomial(Rat(src.at(i, j)), ell_power);
    return m;
}

LogMatrix LogMatrix::operator*(const LogMatrix& o) const {
    if (cols_ != o.rows_) throw Error("dimension mismatch in product");
    LogMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LogMonomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

bool LogMatrix::is_zero() const {
    for (const LogMonomial& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RatMatrix LogMatrix::at_ell_one() const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff();
    return m;
}

std::vector<LogMonomial> LogMatrix::column(int j) const {
    std::vector<LogMonomial> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

LogMonomial log_det(const LogMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const int n = m.rows();
    LogMatrix w = m;
    LogMonomial d = LogMonomial::one();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) return LogMonomial::zero();
        if (p != col) {
            for (int j = col; j < n; ++j) std::swap(w.at(col, j), w.at(p, j));
            d = -d;
        }
        const LogMonomial piv = w.at(col, col);
        d = d * piv;
        for (int i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const LogMonomial f = w.at(i, col) / piv;
            for (int j = col; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(col, j);
        }
    }
    return d;
}

std::vector<int> pivot_columns(const LogMatrix& m) {
    LogMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!w.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        const LogMonomial pivv = w.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (w.at(i, c).is_zero()) continue;
            const LogMonomial f = w.at(i, c) / pivv;
            for (int j = c; j < cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int log_rank(const LogMatrix& m) { return static_cast<int>(pivot_columns(m).size()); }

BasedComplex::BasedComplex(std::vector<int> dims, std::vector<LogMatrix> diffs,
                           std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), d_(std::move(diffs)), labels_(std::move(labels)) {
    const int len = static_cast<int>(dims_.size());
    for (int v : dims_)
        if (v < 0) throw ValidationError("negative dimension");
    const int expected = std::max(len - 1, 0);
    if (static_cast<int>(d_.size()) != expected && static_cast<int>(d_.size()) != len)
        throw ValidationError("wrong number of differentials");
    if (static_cast<int>(d_.size()) == expected && len > 0)
        d_.emplace_back(0, dims_[len - 1]); // zero map out of the top degree
    for (int i = 0; i + 1 < len; ++i)
        if (d_[i].rows() != dims_[i + 1] || d_[i].cols() != dims_[i])
            throw ValidationError("differential shape mismatch at degree " + std::to_string(i));
    if (len > 0 && d_[len - 1].cols() != dims_[len - 1])
        throw ValidationError("differential shape mismatch at top degree");
    for (int i = 0; i + 1 < len; ++i)
        if (!(d_[i + 1] * d_[i]).is_zero())
            throw ValidationError("differential does not square to zero at degree " + std::to_string(i));

    if (labels_.empty()) {
        labels_.resize(len);
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < dims_[i]; ++j)
                labels_[i].push_back("e" + std::to_string(j));
    }
    if (static_cast<int>(labels_.size()) != len) throw ValidationError("label list length mismatch");
    for (int i = 0; i < len; ++i)
        if (static_cast<int>(labels_[i].size()) != dims_[i])
            throw ValidationError("label count mismatch at degree " + std::to_string(i));
}

bool is_acyclic(const BasedComplex& c) {
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
        const int out_rank = exact::rank(c.diff(i).at_ell_one());
        const int in_rank = i > 0 ? exact::rank(c.diff(i - 1).at_ell_one()) : 0;
        if (out_rank + in_rank != c.dim(i)) return false;
    }
    return true;
}

namespace {

// Shared worker for the deterministic and randomized determinant. The image
// basis at degree i+1 is d_i applied to the pivot coordinate vectors, mixed
// by an invertible mix[i]; preimages pick up offsets along the image columns
// already present in their degree. Choices cancel in the alternating product.
struct Choices {
    std::vector<RatMatrix> mix;    // mix[i]: k_i x k_i, invertible
    std::vector<RatMatrix> offset; // offset[i]: k_{i-1} x k_i
};

LogMonomial determinant_impl(const BasedComplex& c, const Choices* ch) {
    const int len = c.length();
    std::vector<std::vector<int>> piv(len);
    for (int i = 0; i < len; ++i) piv[i] = pivot_columns(c.diff(i));
    for (int i = 0; i < len; ++i) {
        const int out_rank = static_cast<int>(piv[i].size());
        const int in_rank = i > 0 ? static_cast<int>(piv[i - 1].size()) : 0;
        if (out_rank + in_rank != c.dim(i))
            throw NotAcyclic("complex is not exact at degree " + std::to_string(i));
    }

    LogMonomial result = LogMonomial::one();
    for (int i = 0; i < len; ++i) {
        const int n = c.dim(i);
        if (n == 0) continue;
        const int k_in = i > 0 ? static_cast<int>(piv[i - 1].size()) : 0;
        const int k_out = static_cast<int>(piv[i].size());

        // image part: d_{i-1} on the chosen preimage coordinates
        LogMatrix img(n, k_in);
        if (k_in > 0) {
            const LogMatrix& dprev = c.diff(i - 1);
            for (int a = 0; a < k_in; ++a)
                for (int r = 0; r < n; ++r) img.at(r, a) = dprev.at(r, piv[i - 1][a]);
            if (ch) {
                const RatMatrix& t = ch->mix[i - 1];
                LogMatrix mixed(n, k_in);
                for (int r = 0; r < n; ++r)
                    for (int a = 0; a < k_in; ++a) {
                        LogMonomial acc;
                        for (int b = 0; b < k_in; ++b)
                            acc = acc + img.at(r, b) * LogMonomial(t.at(b, a), 0);
                        mixed.at(r, a) = acc;
                    }
                img = mixed;
            }
        }

        LogMatrix s(n, n);
        for (int a = 0; a < k_in; ++a)
            for (int r = 0; r < n; ++r) s.at(r, a) = img.at(r, a);
        // preimage part: pivot coordinate vectors, mixed like the images
        // they map to, plus offsets along the image columns
        for (int a = 0; a < k_out; ++a) {
            std::vector<LogMonomial> col(n);
            if (ch) {
                const RatMatrix& t = ch->mix[i];
                for (int b = 0; b < k_out; ++b)
                    col[piv[i][b]] = col[piv[i][b]] + LogMonomial(t.at(b, a), 0);
                const RatMatrix& off = ch->offset[i];
                for (int b = 0; b < k_in; ++b) {
                    if (off.at(b, a) == 0) continue;
                    // scale away the image column's ell-power so the offset
                    // lands in the (power zero) coordinates of this degree;
                    // any monomial multiple of an image vector is a valid
                    // kernel offset, so this is a free choice
                    long long img_power = 0;
                    for (int r = 0; r < n; ++r)
                        if (!img.at(r, b).is_zero()) {
                            img_power = img.at(r, b).ell_power();
                            break;
                        }
                    const LogMonomial f(off.at(b, a), -img_power);
                    for (int r = 0; r < n; ++r) col[r] = col[r] + f * img.at(r, b);
                }
            } else {
                col[piv[i][a]] = LogMonomial::one();
            }
            for (int r = 0; r < n; ++r) s.at(r, k_in + a) = col[r];
        }

        const LogMonomial d = log_det(s);
        if (d.is_zero()) throw NotAcyclic("chosen bases fail to span degree " + std::to_string(i));
        result = result * d.abs_value().pow_int((i % 2 == 0) ? -1 : 1);
    }
    return result;
}

RatMatrix random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        if (exact::det(m) != 0) return m;
    }
}

} // namespace

LogMonomial complex_determinant(const BasedComplex& c) {
    return determinant_impl(c, nullptr);
}

LogMonomial complex_determinant_randomized(const BasedComplex& c, std::mt19937_64& rng) {
    const int len = c.length();
    Choices ch;
    ch.mix.reserve(len);
    ch.offset.reserve(len);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    for (int i = 0; i < len; ++i) {
        const int k_out = log_rank(c.diff(i));
        const int k_in = i > 0 ? log_rank(c.diff(i - 1)) : 0;
        ch.mix.push_back(random_invertible(k_out, rng));
        RatMatrix off(k_in, k_out);
        for (int a = 0; a < k_in; ++a)
            for (int b = 0; b < k_out; ++b) off.at(a, b) = Rat(Int(num(rng)), Int(den(rng)));
        ch.offset.push_back(off);
    }
    return determinant_impl(c, &ch);
}

LogMonomial determinant_base_change(const BasedComplex& c,
                                    const std::vector<RatMatrix>& new_bases) {
    if (static_cast<int>(new_bases.size()) != c.length())
        throw Error("one base change per degree required");
    LogMonomial factor = LogMonomial::one();
    for (int i = 0; i < c.length(); ++i) {
        const RatMatrix& n = new_bases[i];
        if (n.rows() != c.dim(i) || n.cols() != c.dim(i))
            throw Error("base change shape mismatch at degree " + std::to_string(i));
        const Rat d = exact::det(n);
        if (d == 0)
            throw SingularBaseChange("singular base change at degree " + std::to_string(i));
        factor = factor * LogMonomial(abs(d), 0).pow_int((i % 2 == 0) ? 1 : -1);
    }
    return complex_determinant(c) * factor;
}

BasedComplex rebased(const BasedComplex& c, const std::vector<RatMatrix>& new_bases) {
    if (static_cast<int>(new_bases.size()) != c.length())
        throw Error("one base change per degree required");
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
        const RatMatrix& n = new_bases[i];
        if (n.rows() != c.dim(i) || n.cols() != c.dim(i))
            throw Error("base change shape mismatch at degree " + std::to_string(i));
        if (exact::det(n) == 0)
            throw SingularBaseChange("singular base change at degree " + std::to_string(i));
    }
    // coordinates transform by n^T on the source and (n^T)^-1 on the target
    std::vector<LogMatrix> diffs;
    for (int i = 0; i + 1 < len; ++i) {
        const LogMatrix lhs = LogMatrix::from(new_bases[i + 1].transpose().inverse());
        const LogMatrix rhs = LogMatrix::from(new_bases[i].transpose());
        diffs.push_back(lhs * (c.diff(i) * rhs));
    }
    return BasedComplex(c.dims(), std::move(diffs));
}

} // namespace zetaflow::cdet
