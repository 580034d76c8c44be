#pragma once

#include <stdexcept>
#include <string>

namespace lagt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The dimensionless argument of a Laguerre table exceeds the
/// representability guard of the requested precision.
class GuardExceeded : public Error {
public:
    GuardExceeded(double argument, double guard)
        : Error("Laguerre argument " + std::to_string(argument) + " exceeds the evaluation guard " +
                std::to_string(guard) + "; use shift doubling"),
          argument_(argument),
          guard_(guard) {}

    double argument() const noexcept { return argument_; }
    double guard() const noexcept { return guard_; }

private:
    double argument_;
    double guard_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptySpectrum : public Error {
public:
    using Error::Error;
};

/// Relative error requested against an identically zero reference.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A requested buffer exceeds the configured size guard.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace lagt
