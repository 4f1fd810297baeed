#pragma once

#include <stdexcept>
#include <string>

namespace adjspec {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular (or numerically singular under the tolerance)") {}
};

struct PoleAtExpansionPoint : Error {
    PoleAtExpansionPoint() : Error("polynomial vanishes at the expansion point") {}
};

/// The characteristic polynomial has a residual factor with no Gaussian-rational root.
struct IrrationalSpectrum : Error {
    explicit IrrationalSpectrum(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct MultiplicityMismatch : Error {
    explicit MultiplicityMismatch(const std::string& what) : Error(what) {}
};

struct InconsistentSpectrum : Error {
    explicit InconsistentSpectrum(const std::string& what) : Error(what) {}
};

struct DegenerateBasis : Error {
    explicit DegenerateBasis(const std::string& what) : Error(what) {}
};

struct JetTooShort : Error {
    explicit JetTooShort(const std::string& what) : Error(what) {}
};

struct PoleAtEigenvalue : Error {
    explicit PoleAtEigenvalue(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace adjspec
