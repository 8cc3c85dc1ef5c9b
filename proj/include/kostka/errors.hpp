#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

// Bad user-supplied data (malformed partitions, out-of-range labels, ...).
// The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured cap was hit (face count, recursion states, time budget).
// The CLI maps this to exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kostka
