#pragma once

#include <stdexcept>
#include <string>

namespace opencat {

enum class ErrorKind {
    NotComposable,
    BoundaryMismatch,
    UnknownObject,
    UnknownArrow,
    UnknownElement,
    Malformed,
    Parse,
    SizeLimit,
};

const char* to_string(ErrorKind kind) noexcept;

/// Thrown for contract violations (bad arguments, mismatched boundaries, unparsable input).
/// Axiom violations of otherwise well-formed data are reported through Report instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace opencat
