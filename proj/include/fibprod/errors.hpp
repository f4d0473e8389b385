#pragma once

#include <stdexcept>
#include <string>

namespace fibprod {

// Raised when a request exceeds a configured resource ceiling (dense
// expansion size, partition enumeration bound). Distinct from a wrong
// answer or bad input: the value exists, computing it here would just
// blow the budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fibprod
