#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A bracketed search found no sign change / no admissible root.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// A trajectory or integrand ran into a singular point (e.g. y -> 0).
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Adaptive stepping or quadrature could not meet the requested tolerance.
class ToleranceError : public Error {
public:
    using Error::Error;
};

/// A curve handed to an area/volume routine does not bound a region.
class OpenCurveError : public Error {
public:
    using Error::Error;
};

/// A candidate set cannot be built at the requested mean curvature.
class InadmissibleError : public Error {
public:
    using Error::Error;
};

} // namespace cheeger
