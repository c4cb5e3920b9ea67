#pragma once

#include <stdexcept>
#include <string>

namespace disentangle {

/// Argument outside the mathematical domain of an operation (angles, qubit
/// indices, qubit counts).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested statevector exceeds the supported qubit count.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands of incompatible dimension or qubit count.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value violates a type invariant or a precondition that is not a plain
/// domain check (e.g. a non-unitary device transform).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OptimizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace disentangle
