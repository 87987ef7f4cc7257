#include "subtrop/error.hpp"

namespace subtrop {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Syntax: return "syntax error";
    case ErrorCode::DuplicateCoefficientName: return "duplicate coefficient name";
    case ErrorCode::DuplicateMonomial: return "duplicate monomial";
    case ErrorCode::NegativeExponent: return "negative exponent";
    case ErrorCode::NonPositiveCoefficient: return "non-positive coefficient";
    case ErrorCode::MixedCoefficientModes: return "mixed coefficient modes";
    case ErrorCode::MissingCoefficient: return "missing coefficient";
    case ErrorCode::Malformed: return "malformed input";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::MultiRow: return "multiple rows";
    case ErrorCode::UncertifiedExponent: return "uncertified exponent";
    case ErrorCode::UnboundCoefficient: return "unbound coefficient";
    case ErrorCode::NonIntegerCoefficient: return "non-integer coefficient";
    case ErrorCode::NonPositivePoint: return "non-positive point";
    case ErrorCode::PreconditionViolated: return "precondition violated";
    case ErrorCode::WitnessFailure: return "witness failure";
    case ErrorCode::TooManySelections: return "too many selections";
    case ErrorCode::BoxTooLarge: return "box too large";
    case ErrorCode::MaxBitsExceeded: return "max bits exceeded";
    }
    return "unknown error";
}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

} // namespace subtrop
