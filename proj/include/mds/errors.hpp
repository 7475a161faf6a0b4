#pragma once

#include <stdexcept>
#include <string>

#include "mds/numeric.hpp"

namespace mds {

/// Bad input to an operation (wrong shape, violated precondition).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polytope or fan that is unbounded, degenerate, or not of the required type.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoRelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInSemigroup : public std::runtime_error {
 public:
  explicit NotInSemigroup(BigInt d)
      : std::runtime_error("NotInSemigroup(" + d.str() + ")"), d_(std::move(d)) {}
  const BigInt& d() const noexcept { return d_; }

 private:
  BigInt d_;
};

/// Width exactly 1: allowed for 3D GK-type polytopes but rejected by the slice criteria.
class BoundaryWidthError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Slice criterion gave different answers at different dilation factors.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mds
