#pragma once

#include <stdexcept>
#include <string>

namespace nilgrade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed caller input: index out of range, wrong vector length, bad weight.
class InputError : public Error {
public:
    using Error::Error;
};

/// Text that could not be parsed (JSON documents, rational literals, CSV lists).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structurally well-formed algebra whose brackets violate the Jacobi identity.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The lower central series stabilised above zero.
class NotNilpotent : public Error {
public:
    using Error::Error;
};

/// Unknown catalog name or family.
class LookupError : public Error {
public:
    using Error::Error;
};

/// An operation was called on input that violates its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace nilgrade
