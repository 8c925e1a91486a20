#pragma once

#include <stdexcept>
#include <string>

namespace rfdress {

// Input outside the mathematical domain of an operation (no real crossing,
// both fields zero, nonpositive adiabaticity, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical procedure failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rfdress
