#include "zetaflow/exact/poly.hpp"

#include <sstream>

namespace zetaflow::exact {

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r(c_);
    for (Int& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return {};
    std::vector<Int> rem = c_;
    const int dd = d.degree();
    const int dq = degree() - dd;
    if (dq < 0) throw Error("inexact polynomial division");
    std::vector<Int> q(dq + 1);
    for (int k = dq; k >= 0; --k) {
        Int top = rem[k + dd];
        if (top == 0) { q[k] = 0; continue; }
        if (top % d.leading() != 0) throw Error("inexact polynomial division");
        q[k] = top / d.leading();
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q[k] * d.coeff(j);
    }
    for (const Int& v : rem)
        if (v != 0) throw Error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& v : c_) g = gcd(g, v);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    const Int g = content();
    std::vector<Int> r(c_);
    for (Int& v : r) v /= g;
    if (r.back() < 0)
        for (Int& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Int& v = c_[k];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        const Int a = abs(v);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// pseudo-remainder: lc(d)^(deg n - deg d + 1) * n = q*d + r
IntPolynomial pseudo_rem(IntPolynomial n, const IntPolynomial& d) {
    const int dd = d.degree();
    while (!n.is_zero() && n.degree() >= dd) {
        std::vector<Int> scaled(n.coeffs());
        for (Int& v : scaled) v *= d.leading();
        IntPolynomial sn(std::move(scaled));
        std::vector<Int> shift(n.degree() - dd + 1);
        shift.back() = n.leading();
        n = sn - IntPolynomial(std::move(shift)) * d;
    }
    return n;
}

} // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial g = a.primitive_part();
    IntPolynomial h = b.primitive_part();
    if (g.is_zero()) return h;
    if (h.is_zero()) return g;
    while (!h.is_zero()) {
        IntPolynomial r = pseudo_rem(g, h).primitive_part();
        g = h;
        h = r;
    }
    return g.primitive_part();
}

IntPolynomial det_one_minus_t(const IntMatrix& a) {
    if (!a.is_square()) throw Error("det(1 - tA) of non-square matrix");
    const int n = a.rows();
    std::vector<Int> c(n + 1);
    Int sign = 1;
    for (int k = 0; k <= n; ++k) {
        c[k] = sign * exterior_power(a, k).trace();
        sign = -sign;
    }
    return IntPolynomial(std::move(c));
}

int multiplicity_at_one(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("multiplicity of the zero polynomial");
    const IntPolynomial lin({Int(1), Int(-1)}); // 1 - t
    int m = 0;
    IntPolynomial q = p;
    while (q.eval(Int(1)) == 0) {
        q = q.div_exact(lin);
        ++m;
    }
    return m;
}

} // namespace zetaflow::exact
