#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Input rejected before any computation (non-positive radii, R <= r, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace steiner
