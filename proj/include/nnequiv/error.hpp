#pragma once

#include <stdexcept>
#include <string>

namespace nnequiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (model file, decimal literal, solver output).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed value breaks a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix sizes do not line up.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its permitted range (epsilon <= 0, k > m, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

}  // namespace nnequiv
