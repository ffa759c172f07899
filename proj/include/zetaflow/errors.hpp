#ifndef ZETAFLOW_ERRORS_HPP
#define ZETAFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetaflow {

// Base for every failure this library reports on purpose. Anything else
// escaping is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact layer
struct SingularBaseChange : Error { using Error::Error; };
struct BadDegree : Error { using Error::Error; };

// based-complex layer
struct MixedEllPowers : Error { using Error::Error; };
struct NotAcyclic : Error { using Error::Error; };
struct ZeroRatio : Error { using Error::Error; };

// suspension layer
struct NotUnimodular : Error { using Error::Error; };

// orbit layer
struct DegenerateOrbits : Error {
    explicit DegenerateOrbits(int m)
        : Error("no isolated fixed points at iterate " + std::to_string(m)),
          period(m) {}
    int period;
};
struct SignInstability : Error { using Error::Error; };

// spectral layer
struct InvalidSpectrum : Error { using Error::Error; };
struct ZeroEigenvalue : Error { using Error::Error; };

// io layer
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace zetaflow

#endif
