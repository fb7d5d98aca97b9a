#pragma once

#include <stdexcept>
#include <string>

namespace frachardy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole of the Gamma function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// A kernel table was asked for a point outside its box.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Too few samples for a fit or extrapolation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

} // namespace frachardy
