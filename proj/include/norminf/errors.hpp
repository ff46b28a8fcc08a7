#pragma once

#include <stdexcept>
#include <string>

namespace norminf {

// Malformed group specs, arrows outside a lattice, bad intervals.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation only defined on squarefree (cube) lattices.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Size ceilings: brute-force candidate count, bit-vector capacity, lattice size.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two transfer systems living on different lattices.
class LatticeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed JSON, hex or catalogue input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace norminf
