#pragma once

#include <stdexcept>
#include <string>

namespace rcthyper {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A trend classification found more than one reversal.
class MixedPatternError : public std::runtime_error {
 public:
  explicit MixedPatternError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcthyper
