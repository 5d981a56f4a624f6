#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repzeta {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a configured work budget (group order, block size, scan
// dimension, ...) would be exceeded. `reached` records how far we got.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

}  // namespace repzeta
