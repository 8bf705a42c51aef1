#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace km {

enum class Errc {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroAsymmetry,
  InvalidArgument,
  IndexOutOfRange,
  NotSpherical,
  ComponentNotSpherical,
  NotEssential,
  MissingWitness,
  NotPrimePower,
  NotFound,
  BudgetExceeded,
  Overflow,
  VerificationFailed,
  ParseError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::ZeroAsymmetry: return "ZeroAsymmetry";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotSpherical: return "NotSpherical";
    case Errc::ComponentNotSpherical: return "ComponentNotSpherical";
    case Errc::NotEssential: return "NotEssential";
    case Errc::MissingWitness: return "MissingWitness";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotFound: return "NotFound";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Errors caused by caller input (as opposed to exhausted budgets or broken
/// internal invariants).
constexpr bool is_input_error(Errc c) {
  switch (c) {
    case Errc::NotSquare:
    case Errc::DiagonalNotTwo:
    case Errc::PositiveOffDiagonal:
    case Errc::ZeroAsymmetry:
    case Errc::InvalidArgument:
    case Errc::IndexOutOfRange:
    case Errc::NotSpherical:
    case Errc::ComponentNotSpherical:
    case Errc::NotEssential:
    case Errc::MissingWitness:
    case Errc::NotPrimePower:
    case Errc::ParseError:
      return true;
    default:
      return false;
  }
}

/// Single exception type of the library. `tag()` renders the code together
/// with its 1-based position arguments, e.g. "ZeroAsymmetry(1,2)".
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string tag, const std::string& detail)
      : std::runtime_error(tag + ": " + detail), code_(code), tag_(std::move(tag)) {}

  Error(Errc code, const std::string& detail)
      : Error(code, std::string(errc_name(code)), detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& tag() const noexcept { return tag_; }

 private:
  Errc code_;
  std::string tag_;
};

}  // namespace km
