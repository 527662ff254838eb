#pragma once

// Error taxonomy shared by the library and the command line driver.
//
//   ValidationError  - malformed or out-of-domain user input (CLI exit 2)
//   BudgetError      - an enumeration would exceed the configured budget
//                      (CLI exit 3); carries the projected tuple count
//   InternalError    - a mathematical invariant failed; always a bug in the
//                      engine, never a user error (CLI exit 4)

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagcalc {

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
  BudgetError(const std::string& what, std::string projected_count)
      : std::runtime_error(what), projected(std::move(projected_count)) {}
  std::string projected;  // decimal rendering of the projected enumeration size
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagcalc
