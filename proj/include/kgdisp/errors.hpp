#pragma once

#include <stdexcept>
#include <string>

namespace kgd {

/// Caller broke an operation's precondition (bad axis, size mismatch, band out of range).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A run or geometry configuration cannot produce a meaningful result
/// (box too small for the horizon, slice outside the support region, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed: non-finite values, inconsistent sampling.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kgd
