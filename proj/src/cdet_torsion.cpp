#include "zetaflow/cdet/torsion.hpp"

namespace zetaflow::cdet {

Rat torsion_from_homology(const HomologySummary& h) {
    Rat out = 1;
    for (size_t i = 0; i < h.size(); ++i) {
        const Rat t(h[i].torsion_order());
        out *= (i % 2 == 0) ? t : Rat(1) / t;
    }
    return out;
}

Rat tau_base_change(const Rat& tau, const std::vector<Rat>& ratios) {
    Rat out = tau;
    for (size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] == 0) throw ZeroRatio("zero base-change ratio at degree " + std::to_string(i));
        const Rat a = abs(ratios[i]);
        out *= (i % 2 == 0) ? a : Rat(1) / a;
    }
    return out;
}

Rat dual_ratio(const Rat& r) {
    if (r == 0) throw ZeroRatio("zero ratio has no dual");
    return Rat(1) / r;
}

} // namespace zetaflow::cdet
