#pragma once

#include <stdexcept>
#include <string>

namespace nsbf {

/// Invalid input or a request outside an operation's domain (CLI exit code 1).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite value or failed to converge (CLI exit code 2).
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries the usage text when --help is given (CLI exit code 0).
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nsbf
