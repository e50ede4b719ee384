#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input matrix fails the Hermitian-symmetry precondition.
struct NotHermitianError : Error {
    using Error::Error;
};

/// Argument outside its documented domain.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// A state violates positivity/trace constraints beyond repairable rounding.
struct NonPhysicalError : Error {
    using Error::Error;
};

/// Numerics broke down (e.g. clearly negative eigenvalue of a PSD-by-construction matrix).
struct NumericalError : Error {
    using Error::Error;
};

/// Gate edges do not fall on histogram bin boundaries.
struct MisalignedGateError : Error {
    using Error::Error;
};

/// A histogram with no counts where counts are required.
struct EmptyHistogramError : Error {
    using Error::Error;
};

/// Malformed configuration or data file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace biphoton
