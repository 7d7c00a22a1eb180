#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace casesweep {

/// Argument outside an operation's mathematical domain (m = 0, k < 2, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Request exceeds an exhaustive-sweep or memory budget.
class BudgetError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A node sequence that is not a path of the graph it claims to walk.
class PathError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a solution oracle fails; carries the case being queried.
class OracleError : public std::runtime_error {
  public:
    OracleError(std::uint64_t case_value, const std::string& what)
        : std::runtime_error("oracle failed at case " + std::to_string(case_value) + ": " + what),
          case_value_(case_value) {}

    [[nodiscard]] std::uint64_t case_value() const noexcept { return case_value_; }

  private:
    std::uint64_t case_value_;
};

} // namespace casesweep
