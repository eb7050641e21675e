#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hii {

enum class ErrorKind {
  DivisionByZero,
  InvalidDatum,
  UnknownType,
  SizeLimitExceeded,
  NotClosed,
  DecompositionFailure,
  FormulaMismatch,
  IdentityViolation,
  InconsistentStrings,
  PoleFlag,
  ZeroFlag,
  NotSteinbergType,
  NotDiscrete,
  MissingEnhancement,
  InvalidInput,
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

template <ErrorKind K>
class KindError : public Error {
 public:
  explicit KindError(const std::string& what) : Error(K, what) {}
};

using DivisionByZero = KindError<ErrorKind::DivisionByZero>;
using InvalidDatum = KindError<ErrorKind::InvalidDatum>;
using UnknownType = KindError<ErrorKind::UnknownType>;
using SizeLimitExceeded = KindError<ErrorKind::SizeLimitExceeded>;
using NotClosed = KindError<ErrorKind::NotClosed>;
using DecompositionFailure = KindError<ErrorKind::DecompositionFailure>;
using FormulaMismatch = KindError<ErrorKind::FormulaMismatch>;
using IdentityViolation = KindError<ErrorKind::IdentityViolation>;
using InconsistentStrings = KindError<ErrorKind::InconsistentStrings>;
using PoleFlag = KindError<ErrorKind::PoleFlag>;
using ZeroFlag = KindError<ErrorKind::ZeroFlag>;
using NotSteinbergType = KindError<ErrorKind::NotSteinbergType>;
using NotDiscrete = KindError<ErrorKind::NotDiscrete>;
using MissingEnhancement = KindError<ErrorKind::MissingEnhancement>;
using InvalidInput = KindError<ErrorKind::InvalidInput>;

}  // namespace hii
