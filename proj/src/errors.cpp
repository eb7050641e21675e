#include "hiicheck/errors.hpp"

namespace hii {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::InconsistentStrings: return "InconsistentStrings";
    case ErrorKind::PoleFlag: return "PoleFlag";
    case ErrorKind::ZeroFlag: return "ZeroFlag";
    case ErrorKind::NotSteinbergType: return "NotSteinbergType";
    case ErrorKind::NotDiscrete: return "NotDiscrete";
    case ErrorKind::MissingEnhancement: return "MissingEnhancement";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace hii
