#ifndef MONALG_ERRORS_HPP
#define MONALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monalg {

enum class ErrorCode {
    ZeroGenerator,
    NegativeExponent,
    DimensionMismatch,
    InfiniteAlgebra,
    NotFull,
    NotDownwardClosed,
    NotInner,
    NotOuter,
    NotADerivation,
    InconsistentWeightFunction,
    MissingKey,
    SyntaxError,
    UnsupportedDimension,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class MonomialError : public std::runtime_error {
public:
    MonomialError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the 1-based column where it was detected.
class SyntaxError : public MonomialError {
public:
    SyntaxError(std::size_t column, const std::string& message)
        : MonomialError(ErrorCode::SyntaxError,
                        "column " + std::to_string(column) + ": " + message),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfiniteAlgebra: return "InfiniteAlgebra";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::NotOuter: return "NotOuter";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::InconsistentWeightFunction: return "InconsistentWeightFunction";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    }
    return "UnknownError";
}

} // namespace monalg

#endif // MONALG_ERRORS_HPP
