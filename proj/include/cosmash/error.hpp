#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosmash {

enum class ErrorKind {
  FieldMismatch,
  ShapeError,
  DomainError,
  AxiomError,
  UnsupportedField,
  NoIntegral,
  StructureError,
  NotGrouplike,
  NotCoinvariant,
  ClosureError,
  NotColinear,
  PreconditionFailed,
  NoCompatibleCoaction,
  AmbiguousCoaction,
  NotGraded,
  InvalidGroupTable,
  ParseError,
  UnknownReference,
  ResourceLimit,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is the stable, testable part;
/// the message carries the witness (object name, axiom, basis element).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace cosmash
