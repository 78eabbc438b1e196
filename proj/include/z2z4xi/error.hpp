#ifndef Z2Z4XI_ERROR_HPP
#define Z2Z4XI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace z2z4xi {

enum class ErrorKind {
    InvalidArgument,
    NotMonic,
    NotBasicIrreducible,
    NotPrimitive,
    NotHenselLift,
    ContextMismatch,
    NotUnit,
    DivisionByZero,
    DivisorNotUnitLeading,
    ShapeMismatch,
    OrthogonalityCheckFailed,
    MissingComponent,
    NotRightDivisible,
    InvalidGenerators,
    BudgetExceeded,
    NotACode,
    TrivialCode,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotBasicIrreducible: return "NotBasicIrreducible";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::NotHenselLift: return "NotHenselLift";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DivisorNotUnitLeading: return "DivisorNotUnitLeading";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::OrthogonalityCheckFailed: return "OrthogonalityCheckFailed";
        case ErrorKind::MissingComponent: return "MissingComponent";
        case ErrorKind::NotRightDivisible: return "NotRightDivisible";
        case ErrorKind::InvalidGenerators: return "InvalidGenerators";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotACode: return "NotACode";
        case ErrorKind::TrivialCode: return "TrivialCode";
    }
    return "Unknown";
}

/// Library-wide exception; `kind()` names the violated condition.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Raised by the text grammars. Line and column are 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line),
          column_(column),
          message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace z2z4xi

#endif
