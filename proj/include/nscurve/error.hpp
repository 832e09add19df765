#pragma once

#include <stdexcept>
#include <string>

namespace nscurve {

enum class ErrorKind {
    InvalidArgument,
    DivisionByZero,
    LevelOverflow,
    NeedsSeparableExtension,
    PointNotOnCurve,
    NotIsolated,
    NotUnibranch,
    TruncationTooSmall,
    AllDerivativesVanish,
    NotInvariant,
    NoWitness,
    DistinctTypes,
    InvalidParameters,
    InvariantLine,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse errors carry the 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LevelOverflow: return "LevelOverflow";
    case ErrorKind::NeedsSeparableExtension: return "NeedsSeparableExtension";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotUnibranch: return "NotUnibranch";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::AllDerivativesVanish: return "AllDerivativesVanish";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::DistinctTypes: return "DistinctTypes";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvariantLine: return "InvariantLine";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace nscurve
