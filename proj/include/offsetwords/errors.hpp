#pragma once

#include <stdexcept>
#include <string>

namespace offsetwords {

/// Raised when an enumeration or expansion would exceed its configured cap.
/// Callers get an explicit refusal instead of a truncated answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an evaluation point lies outside the strong stability region |x| < 1/d.
class StabilityViolation : public std::domain_error {
public:
    explicit StabilityViolation(const std::string& what) : std::domain_error(what) {}
};

/// Two independent computation routes disagreed. Always an implementation bug.
class InternalMismatch : public std::logic_error {
public:
    explicit InternalMismatch(const std::string& what) : std::logic_error(what) {}
};

} // namespace offsetwords
