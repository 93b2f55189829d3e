#pragma once

#include <stdexcept>
#include <string>

namespace realsnf {

enum class Errc {
  DivisionByZero,
  UnsupportedRing,
  BothZero,
  ZeroElement,
  UnitInput,
  ZeroPolynomial,
  NotSquareFree,
  NotCertifiedIrreducible,
  NotSymmetric,
  NotSquare,
  ShapeMismatch,
  SizeLimit,
  SpecInvariantViolated,
  ZeroRational,
  PreconditionFailed,
  ParseError,
  InternalError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::UnitInput: return "UnitInput";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::NotCertifiedIrreducible: return "NotCertifiedIrreducible";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::SpecInvariantViolated: return "SpecInvariantViolated";
    case Errc::ZeroRational: return "ZeroRational";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// lets callers (the CLI in particular) map errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace realsnf
