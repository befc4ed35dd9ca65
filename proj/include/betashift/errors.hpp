#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betashift {

// Error taxonomy mirrored by the CLI exit codes:
//   DomainError family  -> exit 2
//   PrecisionError/GuardError/UndecidedError -> exit 3

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A digit tail that is not the greedy expansion of 1 for any admissible base.
class InvalidExpansionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Orbit arithmetic entered the ambiguous band around an integer boundary.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, std::size_t reliable_prefix)
      : std::runtime_error(what), reliable_prefix_(reliable_prefix) {}
  std::size_t reliable_prefix() const { return reliable_prefix_; }

 private:
  std::size_t reliable_prefix_;
};

// Enumeration / shift size guard exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lexicographic comparison could not be decided within the numeric
// truncation depth.  Never silently guessed.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace betashift
