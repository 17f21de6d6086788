#pragma once

#include <stdexcept>
#include <string>

namespace dscat {

/// Raised when an integration or root search fails for numerical reasons
/// (overflow, missing nodes, unbracketed roots) rather than bad input.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dscat
