#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcl {

enum class Errc {
  DivisionByZero,
  ParseError,
  DimensionMismatch,
  SingularInconsistent,
  SingularUnderdetermined,
  UnderdeterminedCurves,
  InconsistentData,
  ZeroClass,
  DegenerateCone,
  UnknownFormat,
  OutOfRange,
  SyntaxError,
  UnknownVariable,
  RingMismatch,
  NotHomogeneous,
  NotEventuallyLinear,
  NonLinearHP,
  InvalidPoint,
  DivisionInconsistency,
  SaturationCapExceeded,
  GenericityViolated,
  DegeneratePencil,
  InvalidArgument,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularInconsistent: return "SingularInconsistent";
    case Errc::SingularUnderdetermined: return "SingularUnderdetermined";
    case Errc::UnderdeterminedCurves: return "UnderdeterminedCurves";
    case Errc::InconsistentData: return "InconsistentData";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::DegenerateCone: return "DegenerateCone";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotEventuallyLinear: return "NotEventuallyLinear";
    case Errc::NonLinearHP: return "NonLinearHP";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::DivisionInconsistency: return "DivisionInconsistency";
    case Errc::SaturationCapExceeded: return "SaturationCapExceeded";
    case Errc::GenericityViolated: return "GenericityViolated";
    case Errc::DegeneratePencil: return "DegeneratePencil";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code.
/// Parsers additionally record the byte offset of the offending token.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        position_(position) {}

  Errc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace mcl
