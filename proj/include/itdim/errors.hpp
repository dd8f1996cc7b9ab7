#pragma once

#include <stdexcept>
#include <string>

namespace itdim {

/// Error categories surfaced by the engine. The numeric values are part of
/// the C API (see itdim.h) and must stay stable.
enum class ErrorCode : int {
    InvalidArgument = 10,
    ParseError = 11,
    NonAdmissible = 12,
    ZeroModule = 13,
    ResolutionCutoff = 14,
    PrimeTooSmall = 15,
    DecompositionStuck = 16,
    InternAmbiguous = 17,
    ClosureCutoff = 18,
    OrbitCutoff = 19,
    PdUndetermined = 20,
    ConditionAViolated = 21,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by the text-format parser; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(ErrorCode::ParseError,
                std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace itdim
