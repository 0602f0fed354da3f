#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracdiff {

enum class ErrorCode {
    Domain,          // argument outside the mathematical domain (gamma pole, alpha out of range)
    Accuracy,        // series did not converge or overflowed
    Argument,        // malformed input: sizes, short histories, bad grid
    Ellipticity,     // non-positive diffusion sample
    Singular,        // zero pivot in a tridiagonal solve
    Blowup,          // non-finite value produced by the time march
    DegenerateCurve, // zero norm where a logarithm is required
    Parse,           // malformed text input
    Io,              // file system failure
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fracdiff
