#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different coefficient rings (e.g. different moduli).
class ring_mismatch : public error {
public:
    using error::error;
};

/// An operation needs more known coefficients than the operand carries.
class insufficient_precision : public error {
public:
    using error::error;
};

/// Inversion was requested for a non-unit.
class not_invertible : public error {
public:
    using error::error;
};

/// Argument lies outside the operation's domain (e.g. exp of a series
/// with nonzero constant term).
class domain_error : public error {
public:
    using error::error;
};

/// The coefficient ring lacks a required capability (e.g. invertible
/// positive integers for the generating-function transport).
class capability_error : public error {
public:
    using error::error;
};

/// Malformed configuration or serialized data.
class config_error : public error {
public:
    using error::error;
};

} // namespace hurwitz
