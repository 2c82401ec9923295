#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace legmcs {

// Exit-code families used by the command line tool.
enum class ErrorFamily { InvalidInput, PropertyViolation, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorFamily family, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), family_(family), kind_(std::move(kind)) {}

    ErrorFamily family() const noexcept { return family_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    ErrorFamily family_;
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(int tokenIndex, const std::string& reason)
        : Error(ErrorFamily::InvalidInput, "ParseError",
                tokenIndex < 0 ? reason : "token " + std::to_string(tokenIndex) + ": " + reason),
          tokenIndex_(tokenIndex) {}
    int tokenIndex() const noexcept { return tokenIndex_; }

private:
    int tokenIndex_;
};

class DiagramError : public Error {
public:
    explicit DiagramError(const std::string& what) : Error(ErrorFamily::InvalidInput, "DiagramError", what) {}
};

class MaslovInconsistent : public Error {
public:
    MaslovInconsistent(int cuspEvent, int rotation)
        : Error(ErrorFamily::InvalidInput, "MaslovInconsistent",
                "cusp at event " + std::to_string(cuspEvent) + " violates the Maslov constraint (rotation number " +
                    std::to_string(rotation) + ")"),
          cuspEvent_(cuspEvent), rotation_(rotation) {}
    int cuspEvent() const noexcept { return cuspEvent_; }
    int rotation() const noexcept { return rotation_; }

private:
    int cuspEvent_;
    int rotation_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& kind, const std::string& what) : Error(ErrorFamily::Budget, kind, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorFamily::InvalidInput, "InvalidArgument", what) {}
};

// A request that does not fit the object it is applied to (a move whose local
// pattern is absent, an MCS that is not in A-form, ...).
class InputError : public Error {
public:
    InputError(std::string kind, const std::string& what) : Error(ErrorFamily::InvalidInput, std::move(kind), what) {}
};

// Raised when a computed object breaks a mathematical invariant. These signal
// convention bugs, never user errors.
class PropertyViolation : public Error {
public:
    PropertyViolation(std::string kind, const std::string& what)
        : Error(ErrorFamily::PropertyViolation, std::move(kind), what) {}
};

class AxiomViolation : public PropertyViolation {
public:
    AxiomViolation(std::string axiom, int position, const std::string& what)
        : PropertyViolation("AxiomViolation", "axiom " + axiom + " at timeline position " + std::to_string(position) +
                                                  ": " + what),
          axiom_(std::move(axiom)), position_(position) {}
    const std::string& axiom() const noexcept { return axiom_; }
    int position() const noexcept { return position_; }

private:
    std::string axiom_;
    int position_;
};

}  // namespace legmcs
