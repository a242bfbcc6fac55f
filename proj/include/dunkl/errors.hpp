#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different dimensions m.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed user input: bad rational literal, invalid preset, bad config file.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// The requested integral has no exact formula for this weight.
class UnsupportedWeight : public Error {
public:
    using Error::Error;
};

/// Bilinear form evaluated at a parameter where a Gamma pole appears.
class IllPosed : public Error {
public:
    using Error::Error;
};

/// Adding ClassValues that refer to different base constants.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

} // namespace dunkl
