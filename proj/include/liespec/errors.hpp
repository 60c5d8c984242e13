#pragma once

#include <stdexcept>

namespace liespec {

// Enumeration would exceed the configured visit budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance.
class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liespec
