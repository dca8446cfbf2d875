#pragma once

#include <stdexcept>
#include <string>

namespace saxl {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  DimensionMismatch,
  FieldMismatch,
  SingularMatrix,
  InsufficientExtension,
  CapExceeded,
  MissingData,
  UnknownSocle,
  Schema,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers branch without
/// string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace saxl
