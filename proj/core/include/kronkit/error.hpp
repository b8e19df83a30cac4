#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronkit {

enum class Errc {
  NotWeaklyDecreasing,
  NonPositiveRow,
  EmptyDiagram,
  BoxCountMismatch,
  RankTooSmall,
  RankTooLarge,
  IndexOutOfRange,
  ComponentNotTraceless,
  NotSquare,
  LengthMismatch,
  ShapeMismatch,
  ZeroVector,
  TruncatedToZero,
  NotHermitian,
  BudgetExceeded,
  CapExceeded,
  InternalNonInteger,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every precondition failure in the toolkit surfaces as this exception.
/// Valid-but-negative outcomes (a rejected certificate) are not errors and
/// are reported through `Verdict` instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kronkit
