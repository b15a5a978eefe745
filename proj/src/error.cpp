#include "mdsgrs/error.hpp"

namespace mdsgrs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::TableLimitExceeded: return "TableLimitExceeded";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::CrossField: return "CrossField";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::EvenLength: return "EvenLength";
    case ErrorKind::MultipliersUnset: return "MultipliersUnset";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::ShiftInSubspace: return "ShiftInSubspace";
    case ErrorKind::BasePointsNotInSubfield: return "BasePointsNotInSubfield";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BaseNotSelfDual: return "BaseNotSelfDual";
    case ErrorKind::ParityCondition: return "ParityCondition";
    case ErrorKind::E1NotOdd: return "E1NotOdd";
    case ErrorKind::CharacterCondition: return "CharacterCondition";
    case ErrorKind::TooManyCosets: return "TooManyCosets";
    case ErrorKind::GreedyFailed: return "GreedyFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mdsgrs
