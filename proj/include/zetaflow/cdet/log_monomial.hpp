#ifndef ZETAFLOW_CDET_LOG_MONOMIAL_HPP
#define ZETAFLOW_CDET_LOG_MONOMIAL_HPP

// Scalars of the form c * ell^k with c rational and k an integer, where ell
// is a formal positive unit (the period of the flow). Sums are only defined
// degreewise: the verification chain never mixes ell-powers, and trying to
// is reported as an error instead of silently coercing to floats.

#include <cmath>
#include <string>

#include "zetaflow/errors.hpp"
#include "zetaflow/exact/matrix.hpp"

namespace zetaflow::cdet {

using exact::Int;
using exact::Rat;

class LogMonomial {
public:
    LogMonomial() : coeff_(0), pow_(0) {}
    LogMonomial(Rat coeff, long long ell_power)
        : coeff_(std::move(coeff)), pow_(coeff_ == 0 ? 0 : ell_power) {}

    static LogMonomial zero() { return {}; }
    static LogMonomial one() { return {Rat(1), 0}; }
    static LogMonomial ell(long long power = 1) { return {Rat(1), power}; }

    const Rat& coeff() const { return coeff_; }
    long long ell_power() const { return pow_; }
    bool is_zero() const { return coeff_ == 0; }

    bool operator==(const LogMonomial& o) const {
        return coeff_ == o.coeff_ && pow_ == o.pow_;
    }

    LogMonomial operator+(const LogMonomial& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pow_ != o.pow_)
            throw MixedEllPowers("sum of distinct ell-powers " + std::to_string(pow_) +
                                 " and " + std::to_string(o.pow_));
        return {coeff_ + o.coeff_, pow_};
    }
    LogMonomial operator-(const LogMonomial& o) const { return *this + (-o); }
    LogMonomial operator-() const { return {-coeff_, pow_}; }

    LogMonomial operator*(const LogMonomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        return {coeff_ * o.coeff_, pow_ + o.pow_};
    }
    LogMonomial operator/(const LogMonomial& o) const {
        if (o.is_zero()) throw Error("division by zero monomial");
        if (is_zero()) return {};
        return {coeff_ / o.coeff_, pow_ - o.pow_};
    }

    LogMonomial inverse() const {
        if (is_zero()) throw Error("inverse of zero monomial");
        return {Rat(1) / coeff_, -pow_};
    }
    LogMonomial abs_value() const { return {abs(coeff_), pow_}; }
    LogMonomial pow_int(long long e) const;

    // numeric evaluation at a concrete ell > 0
    double numeric(double ell_value) const {
        return static_cast<double>(coeff_) * std::pow(ell_value, static_cast<double>(pow_));
    }

    std::string to_string() const;

private:
    Rat coeff_;
    long long pow_;
};

} // namespace zetaflow::cdet

#endif
