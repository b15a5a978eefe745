#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsgrs {

enum class ErrorKind {
  CompositeCharacteristic,
  TableLimitExceeded,
  ZeroArgument,
  NotASubfield,
  DependentBasis,
  CrossField,
  InvalidElement,
  DuplicatePoints,
  OddLength,
  EvenLength,
  MultipliersUnset,
  ShapeMismatch,
  EnumerationTooLarge,
  ShiftInSubspace,
  BasePointsNotInSubfield,
  HypothesisViolated,
  BaseNotSelfDual,
  ParityCondition,
  E1NotOdd,
  CharacterCondition,
  TooManyCosets,
  GreedyFailed,
  VerificationFailed,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mdsgrs
