#include "zetaflow/cdet/log_monomial.hpp"

#include <sstream>

namespace zetaflow::cdet {

LogMonomial LogMonomial::pow_int(long long e) const {
    if (e == 0) return one();
    if (is_zero()) {
        if (e < 0) throw Error("negative power of zero monomial");
        return zero();
    }
    Rat c = 1;
    Rat base = e > 0 ? coeff_ : Rat(1) / coeff_;
    long long k = e > 0 ? e : -e;
    for (long long i = 0; i < k; ++i) c *= base;
    return {c, pow_ * e};
}

std::string LogMonomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << coeff_;
    if (pow_ != 0) {
        os << "*l";
        if (pow_ != 1) os << "^" << pow_;
    }
    return os.str();
}

} // namespace zetaflow::cdet
