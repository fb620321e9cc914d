#pragma once

#include <stdexcept>

namespace mpcodes {

// Shared error taxonomy. The CLI maps these categories onto process exit
// codes, so new failure modes should reuse one of them.

// Caller broke a contract (bad arguments, mismatched contexts, invalid config).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (inverse of zero, bound outside its domain).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact computation would exceed a pinned enumeration or memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A floating-point quantity left its representable or guarded range.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpcodes
