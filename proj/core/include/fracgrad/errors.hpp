#pragma once

#include <stdexcept>
#include <string>

namespace fracgrad {

// Numeric argument outside the domain of an operation (non-finite order,
// zero truncation length, non-positive sigma, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller broke a data precondition (sample out of range, negative
// magnitude, mismatched plane dimensions, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed, truncated or unsupported raster data.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures and format/channel-layout mismatches on write.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracgrad
