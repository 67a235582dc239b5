#pragma once

#include <stdexcept>
#include <string>

namespace tangleroof {

// Malformed or unreadable state file.
class StateFileError : public std::runtime_error {
 public:
  explicit StateFileError(const std::string& what) : std::runtime_error(what) {}
};

// Case identifier outside the supported sweep/decomposition set.
class UnknownCaseError : public std::out_of_range {
 public:
  explicit UnknownCaseError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace tangleroof
