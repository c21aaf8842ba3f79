#pragma once

#include <stdexcept>
#include <string>

namespace parmod {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The lattice modulus tau has non-positive imaginary part.
struct InvalidTau : Error {
    explicit InvalidTau(const std::string& what = "InvalidTau: Im(tau) must be positive")
        : Error(what) {}
};

/// A q-series failed to converge within the configured term cap.
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what = "NonConvergence: series term cap reached")
        : Error(what) {}
};

/// A root refinement or residual check missed its required bound.
struct ToleranceFailure : Error {
    explicit ToleranceFailure(const std::string& what = "ToleranceFailure")
        : Error(what) {}
};

/// A parabolic bundle failed the stability requirement of the requested map.
struct NotStable : Error {
    explicit NotStable(const std::string& what = "NotStable") : Error(what) {}
};

/// Two marked lines are bad in the same direction.
struct BadSameDirection : Error {
    explicit BadSameDirection(const std::string& what = "BadSameDirection")
        : Error(what) {}
};

/// A three-point fit could not find sufficiently separated samples.
struct DegenerateSamples : Error {
    explicit DegenerateSamples(const std::string& what = "DegenerateSamples")
        : Error(what) {}
};

/// The bad-locus map was queried with a good last line.
struct NotBadLocus : Error {
    explicit NotBadLocus(const std::string& what = "NotBadLocus") : Error(what) {}
};

/// invert_good was called with a triple lying on the embedded curve.
struct OnCurveInput : Error {
    explicit OnCurveInput(const std::string& what = "OnCurveInput") : Error(what) {}
};

/// An exact polynomial division produced a nonzero remainder.
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& what = "InexactDivision")
        : Error(what) {}
};

}  // namespace parmod
