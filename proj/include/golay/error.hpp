#pragma once

#include <stdexcept>
#include <string>

namespace golay {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched q/m, malformed entries, out-of-range shifts, bad permutations.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A checked integer operation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs q/2 was handed an odd modulus.
class OddModulusError : public Error {
 public:
  explicit OddModulusError(int q) : Error("modulus q=" + std::to_string(q) + " is odd; q/2 is undefined") {}
};

class NotAGapError : public Error {
 public:
  using Error::Error;
};

/// A variable partition splits an interacting pair of variables.
class PartitionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// An internal post-condition did not hold. For genuine inputs this is a defect.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace golay
