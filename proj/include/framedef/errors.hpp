#pragma once

#include <stdexcept>
#include <string>

namespace framedef {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an element that must be invertible in the working ring is not.
struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string& what) : std::domain_error(what) {}
};

struct IncompatibleRings : std::invalid_argument {
    explicit IncompatibleRings(const std::string& what) : std::invalid_argument(what) {}
};

struct UnboundVariable : std::invalid_argument {
    explicit UnboundVariable(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace framedef
