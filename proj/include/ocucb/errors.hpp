#pragma once

#include <stdexcept>
#include <string>

namespace ocucb {

// Precondition violated by the caller (bad arm index, zero pull count, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidHorizon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedPolicy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UndefinedHardness : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad command line or experiment description. Maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ocucb
