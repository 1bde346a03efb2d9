#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace barriers {

/// Elements of barrier sequences and ground sets.
using Nat = std::uint64_t;

/// Colors are unbounded naturals: staged colorings code whole stages into
/// a single color, which quickly outgrows 64 bits.
using Color = boost::multiprecision::cpp_int;

/// A sequence or set contains a number outside the base of the barrier.
class NotInBaseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for this constructor (e.g. order type of a
/// derived barrier).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coloring was queried outside its domain.
class PartialColoringError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A coloring declared k-bounded uses some color more than k times.
class BoundednessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Reported by the CLI with a BUG tag.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace barriers
