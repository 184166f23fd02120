#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Failure categories surfaced by the library. The C API maps these
/// one-to-one onto status codes.
enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    Schema,
    Structural,
    InvalidLevi,
    NotAnIdeal,
    NonLie,
    RadicalNonzero,
    NonZeroMinusOne,
    NoInnerMatch,
    NotInvariant,
    NotDirectSum,
    Verification,
    MissingLevi,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace leibniz
