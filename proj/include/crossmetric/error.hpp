#pragma once

#include <stdexcept>
#include <string>

namespace crossmetric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies exactly on a hyperplane (sign undefined).
class OnHyperplane : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range instance data.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// Random generation could not place a point off every hyperplane.
class ResampleExhausted : public Error {
 public:
  using Error::Error;
};

/// Operation only defined in the plane.
class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

/// A cell/face budget was exceeded; the computation was aborted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Embedding parameters leave no usable near/far gap.
class GapDegenerate : public Error {
 public:
  using Error::Error;
};

class DuplicateId : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

}  // namespace crossmetric
