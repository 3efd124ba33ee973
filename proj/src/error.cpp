#include "cosmash/error.hpp"
#include "cosmash/report.hpp"

#include <algorithm>

namespace cosmash {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::AxiomError: return "AxiomError";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::NoIntegral: return "NoIntegral";
    case ErrorKind::StructureError: return "StructureError";
    case ErrorKind::NotGrouplike: return "NotGrouplike";
    case ErrorKind::NotCoinvariant: return "NotCoinvariant";
    case ErrorKind::ClosureError: return "ClosureError";
    case ErrorKind::NotColinear: return "NotColinear";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoCompatibleCoaction: return "NoCompatibleCoaction";
    case ErrorKind::AmbiguousCoaction: return "AmbiguousCoaction";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void Report::add(std::string name, bool pass, std::string witness, std::string detail) {
  checks.push_back(Check{std::move(name), pass, std::move(witness), std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back(Check{prefix + c.name, c.pass, c.witness, c.detail});
  }
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::string Report::summary() const {
  std::string out = subject.empty() ? std::string("report") : subject;
  if (const Check* bad = first_failure()) {
    out += ": FAIL " + bad->name;
    if (!bad->witness.empty()) out += " (witness " + bad->witness + ")";
  } else {
    out += ": PASS";
  }
  return out;
}

}  // namespace cosmash
