#ifndef ZETAFLOW_EXACT_POLY_HPP
#define ZETAFLOW_EXACT_POLY_HPP

#include <string>
#include <vector>

#include "zetaflow/exact/matrix.hpp"

namespace zetaflow::exact {

// Z[t], coefficients stored ascending, no trailing zeros (zero poly = empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(const Int& v) { return IntPolynomial({v}); }
    static IntPolynomial one() { return constant(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
    }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    // division known to be exact; throws Error otherwise
    IntPolynomial div_exact(const IntPolynomial& d) const;

    Int content() const; // gcd of coefficients, 0 for the zero polynomial
    IntPolynomial primitive_part() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// primitive gcd, positive leading coefficient; gcd(0, b) = primitive |b|
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// det(I - tA) via traces of exterior powers: sum_k (-t)^k tr(Lambda^k A)
IntPolynomial det_one_minus_t(const IntMatrix& a);

// multiplicity of the root t = 1
int multiplicity_at_one(const IntPolynomial& p);

} // namespace zetaflow::exact

#endif
