#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mprod {

// Operand dimensions do not conform.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller-supplied data violates an operation's precondition
// (e.g. a claimed {1}-inverse that is not one).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure, usually localized to one transformed frontal slice.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
    NumericalError(const std::string& what, std::size_t slice)
        : std::runtime_error(what + " (slice " + std::to_string(slice) + ")"), slice_(slice) {}

    /// Zero-based transformed slice the failure is attributed to, if any.
    [[nodiscard]] std::optional<std::size_t> slice() const noexcept { return slice_; }

private:
    std::optional<std::size_t> slice_;
};

// A transformed slice (or the transform matrix itself) is numerically singular.
class SingularError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Malformed JSON input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what), byte_offset_(byte_offset) {}

    [[nodiscard]] std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Well-formed JSON that does not match the expected file schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mprod
