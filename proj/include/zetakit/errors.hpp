#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (n = 0, sigma out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// 64-bit integer overflow. Raised instead of wrapping.
class OverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Intermediate magnitude would overflow double precision.
class RangeError : public Error {
public:
    using Error::Error;
};

/// The requested evaluation route is not valid in this region of the plane.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Zeta is not defined at s = 0 and s = 1.
class UndefinedPointError : public Error {
public:
    using Error::Error;
};

/// Pole of a meromorphic function. `location` is the integer pole position.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::int64_t location)
        : Error(what), location_(location) {}

    std::int64_t location() const noexcept { return location_; }

private:
    std::int64_t location_;
};

/// Evaluation would be ill-conditioned (eta prefactor zero, rotation residue too large).
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace zetakit
