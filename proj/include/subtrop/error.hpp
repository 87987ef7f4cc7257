#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subtrop {

enum class ErrorCode {
    Syntax,
    DuplicateCoefficientName,
    DuplicateMonomial,
    NegativeExponent,
    NonPositiveCoefficient,
    MixedCoefficientModes,
    MissingCoefficient,
    Malformed,
    IndexOutOfRange,
    MultiRow,
    UncertifiedExponent,
    UnboundCoefficient,
    NonIntegerCoefficient,
    NonPositivePoint,
    PreconditionViolated,
    WitnessFailure,
    TooManySelections,
    BoxTooLarge,
    MaxBitsExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse errors carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace subtrop
