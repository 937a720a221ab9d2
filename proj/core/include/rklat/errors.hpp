#pragma once

#include <stdexcept>

namespace rklat {

/// Invalid value handed across a module boundary: bad node sets, negative
/// labels, inconsistent reports, relations over unknown nodes.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work refused because it would exceed a configured size limit.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed. Indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed external input: JSON documents, decimal numbers.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rklat
