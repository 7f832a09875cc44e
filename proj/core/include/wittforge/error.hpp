#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittforge {

enum class ErrorKind {
    InvalidGroup,      // non-positive cyclic order
    Dimension,         // coordinate-length / matrix-shape mismatch
    NotQuadraticForm,  // quadratic-form axiom violated
    Precondition,      // e.g. degenerate form where a metric group is required
    Argument,          // bad scalar argument (non-prime p, even k, m < 1, ...)
    UnsupportedSymbol, // affine symbol without a simple Lie type behind it
    TooLarge,          // enumeration cap exceeded
    InconsistentRing,  // fusion-ring axioms or FP eigenvector check failed
    Parse,             // malformed textual input
    Internal,          // theory says this cannot happen
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace wittforge
